//! Independent reference implementations used as oracles by the test suites.
//!
//! These deliberately share no search machinery with the production code:
//! components are counted with a union-find over adjacency lists instead of
//! bitset BFS, toughness enumerates all `2^n` subsets with no pruning, and
//! the spanning-tree oracle enumerates every spanning tree outright. They are
//! exponential and meant for small orders only.

use crate::graph::Graph;
use crate::invariants::{ratio, ToughnessResult, ToughnessValue};

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn uf_find(parent: &mut [usize], v: usize) -> usize {
    if parent[v] != v {
        parent[v] = uf_find(parent, parent[v]);
    }
    parent[v]
}

fn components_among(adj: &[Vec<usize>], alive: u64, n: usize) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut count = (alive.count_ones()) as usize;
    for u in 0..n {
        if alive >> u & 1 == 0 {
            continue;
        }
        for &v in &adj[u] {
            if v > u && alive >> v & 1 == 1 {
                let (ru, rv) = (uf_find(&mut parent, u), uf_find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    count -= 1;
                }
            }
        }
    }
    count
}

/// Unpruned toughness: minimizes `|S| / c(G-S)` over all `2^n` subsets.
/// Panics when `n < 2` or `n > 24` (this is an oracle, not a production
/// path).
pub fn toughness_exhaustive(g: &Graph) -> ToughnessResult {
    let n = g.order();
    assert!((2..=24).contains(&n), "oracle supports 2 <= n <= 24");
    let adj = adjacency_lists(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<(u64, u64, u64)> = None; // (|S|, c, S-mask)
    for removed in 0..=full {
        let alive = full & !removed;
        if alive.count_ones() < 2 {
            continue;
        }
        let c = components_among(&adj, alive, n) as u64;
        if c < 2 {
            continue;
        }
        let s = removed.count_ones() as u64;
        let better = match best {
            None => true,
            Some((bs, bc, _)) => s * bc < bs * c,
        };
        if better {
            best = Some((s, c, removed));
        }
    }
    match best {
        None => ToughnessResult {
            value: ToughnessValue::Infinite,
            witness: None,
            witness_components: None,
        },
        Some((s, c, mask)) => ToughnessResult {
            value: ToughnessValue::Finite(ratio(s, c)),
            witness: Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()),
            witness_components: Some(c as usize),
        },
    }
}

/// Minimum over all spanning trees of the maximum tree degree, by exhaustive
/// enumeration of the spanning trees. `None` when the graph is disconnected.
pub fn min_spanning_tree_max_degree(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n == 1 {
        return Some(0);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut deg = vec![0usize; n];
    let mut best: Option<usize> = None;
    enumerate_trees(n, &edges, 0, 0, &mut (0..n).collect::<Vec<_>>(), &mut deg, &mut best);
    best
}

/// Whether a spanning tree of maximum degree at most `cap` exists (exact,
/// exhaustive). `None` when disconnected.
pub fn spanning_ktree_exists_exhaustive(g: &Graph, cap: usize) -> Option<bool> {
    min_spanning_tree_max_degree(g).map(|d| d <= cap)
}

fn connectable(n: usize, edges: &[(usize, usize)], from: usize, parent: &[usize]) -> bool {
    let mut scratch = parent.to_vec();
    let mut comps = {
        let mut roots: Vec<usize> = (0..n).map(|v| uf_find(&mut scratch, v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    };
    for &(u, v) in &edges[from..] {
        let (ru, rv) = (uf_find(&mut scratch, u), uf_find(&mut scratch, v));
        if ru != rv {
            scratch[ru] = rv;
            comps -= 1;
            if comps == 1 {
                return true;
            }
        }
    }
    comps == 1
}

fn enumerate_trees(
    n: usize,
    edges: &[(usize, usize)],
    next: usize,
    chosen: usize,
    parent: &mut Vec<usize>,
    deg: &mut Vec<usize>,
    best: &mut Option<usize>,
) {
    if chosen == n - 1 {
        let max = *deg.iter().max().unwrap();
        if best.is_none() || max < best.unwrap() {
            *best = Some(max);
        }
        return;
    }
    if next == edges.len() || !connectable(n, edges, next, parent) {
        return;
    }
    let (u, v) = edges[next];
    let saved = parent.clone();
    let (ru, rv) = (uf_find(parent, u), uf_find(parent, v));
    if ru != rv {
        parent[ru] = rv;
        deg[u] += 1;
        deg[v] += 1;
        enumerate_trees(n, edges, next + 1, chosen + 1, parent, deg, best);
        deg[u] -= 1;
        deg[v] -= 1;
        *parent = saved;
    }
    enumerate_trees(n, edges, next + 1, chosen, parent, deg, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::ratio;

    #[test]
    fn oracle_toughness_matches_hand_values() {
        let r = toughness_exhaustive(&Graph::path(4).unwrap());
        assert_eq!(r.value, ToughnessValue::Finite(ratio(1, 2)));
        let r = toughness_exhaustive(&Graph::complete(4).unwrap());
        assert_eq!(r.value, ToughnessValue::Infinite);
        let r = toughness_exhaustive(&Graph::star(3).unwrap());
        assert_eq!(r.value, ToughnessValue::Finite(ratio(1, 3)));
    }

    #[test]
    fn oracle_tree_degrees() {
        // A star's only spanning tree is itself.
        assert_eq!(min_spanning_tree_max_degree(&Graph::star(4).unwrap()), Some(4));
        // Complete graphs are traceable.
        assert_eq!(min_spanning_tree_max_degree(&Graph::complete(5).unwrap()), Some(2));
        assert_eq!(min_spanning_tree_max_degree(&Graph::empty(3).unwrap()), None);
        assert_eq!(spanning_ktree_exists_exhaustive(&Graph::star(4).unwrap(), 3), Some(false));
    }
}
