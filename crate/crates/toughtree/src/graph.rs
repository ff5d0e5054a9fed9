//! Finite simple undirected graphs with dense integer labels `0..n-1`.
//!
//! Adjacency is stored as one packed bitset per vertex. Graphs are immutable
//! after construction, so they can be shared freely across worker threads.

use crate::bitset::{VertexSet, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("graph order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("edge endpoint {0} is out of range for order {1}")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid split-family parameters: {0}")]
    InvalidSplitFamily(String),
    #[error("invalid constructor arguments: {0}")]
    InvalidArguments(String),
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    fn with_order(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::with_order(n)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::with_order(n)?;
        let full = VertexSet::full(n);
        for v in 0..n {
            let mut row = full;
            row.remove(v);
            g.adj[v] = row;
        }
        Ok(g)
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::with_order(n)?;
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        Ok(g)
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidArguments(format!(
                "cycle needs order >= 3, got {n}"
            )));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_unchecked(0, n - 1);
        Ok(g)
    }

    /// The star with one center (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        if leaves == 0 {
            return Graph::complete(1);
        }
        Graph::complete(1)?.join(&Graph::empty(leaves)?)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::with_order(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    #[inline]
    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Disjoint union; vertices of `other` are relabeled by offset `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::with_order(n)?;
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by the given vertices, relabeled `0..verts.len()`
    /// in the order given.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::with_order(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            if u >= self.n {
                return Err(GraphError::EndpointOutOfRange(u, self.n));
            }
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Image of the graph under the vertex permutation `perm` (vertex `v`
    /// becomes `perm[v]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::BadPermutation(self.n));
            }
            seen[p] = true;
        }
        let mut g = Graph::with_order(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Parameters of the split family `K_s v (K_a u p*K_1)`: a hub clique joined
/// to the disjoint union of a clique part and an independent part.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SplitFamilyParams {
    /// Hub count `s >= 1`; hubs are adjacent to everything.
    pub hubs: usize,
    /// Clique-part size `a >= 1`.
    pub clique: usize,
    /// Independent-part size `p >= 0`.
    pub independents: usize,
}

impl SplitFamilyParams {
    pub fn new(hubs: usize, clique: usize, independents: usize) -> Result<Self, GraphError> {
        if hubs < 1 || clique < 1 {
            return Err(GraphError::InvalidSplitFamily(format!(
                "need hubs >= 1 and clique >= 1, got ({hubs}, {clique}, {independents})"
            )));
        }
        let n = hubs + clique + independents;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(SplitFamilyParams {
            hubs,
            clique,
            independents,
        })
    }

    pub fn order(&self) -> usize {
        self.hubs + self.clique + self.independents
    }
}

/// Builds `K_s v (K_a u p*K_1)` with hubs labeled first, then the clique
/// part, then the independent part.
pub fn build_split_family(params: &SplitFamilyParams) -> Result<Graph, GraphError> {
    let hubs = Graph::complete(params.hubs)?;
    let clique = Graph::complete(params.clique)?;
    let rest = if params.independents == 0 {
        clique
    } else {
        clique.disjoint_union(&Graph::empty(params.independents)?)?
    };
    hubs.join(&rest)
}

/// Recognizes graphs of the form `K_s v (K_a u p*K_1)` with `p >= 2`,
/// returning the parameters. Complete graphs are excluded (they have `p = 0`
/// representations only). Recognition goes through the degree partition, so
/// it is label-independent and needs no isomorphism search: hubs are exactly
/// the vertices of degree `n-1`, independents the vertices whose
/// neighborhood is exactly the hub set, and the remainder must induce a
/// clique with no edges into the independent part.
pub fn match_split_family(g: &Graph) -> Option<SplitFamilyParams> {
    let n = g.order();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let s = hubs.len();
    if s == 0 || s == n {
        return None;
    }
    let hub_set = VertexSet::from_slice(&hubs);
    // Every non-hub is adjacent to all hubs, so the independents are exactly
    // the non-hubs of degree s.
    let mut independents = Vec::new();
    let mut clique = Vec::new();
    for v in 0..n {
        if hub_set.contains(v) {
            continue;
        }
        if g.degree(v) == s {
            independents.push(v);
        } else {
            clique.push(v);
        }
    }
    // The clique part must be exactly a clique on top of the hubs: no edges
    // to independents, all mutual edges present.
    for (i, &u) in clique.iter().enumerate() {
        if g.degree(u) != s + clique.len() - 1 {
            return None;
        }
        for &v in clique.iter().skip(i + 1) {
            if !g.has_edge(u, v) {
                return None;
            }
        }
    }
    let (a, p) = if clique.is_empty() {
        // K_s v m*K_1 reads canonically as clique part K_1 plus m-1 singletons.
        if independents.len() < 2 {
            return None;
        }
        (1, independents.len() - 1)
    } else {
        (clique.len(), independents.len())
    };
    if p < 2 {
        return None;
    }
    Some(SplitFamilyParams {
        hubs: s,
        clique: a,
        independents: p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::edge_count;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(edge_count(&Graph::complete(1).unwrap()), 0);
        assert_eq!(edge_count(&Graph::complete(4).unwrap()), 6);
        assert_eq!(edge_count(&Graph::complete(10).unwrap()), 45);
        assert_eq!(Graph::complete(0).unwrap_err(), GraphError::ZeroOrder);
    }

    #[test]
    fn union_keeps_parts_apart() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&k2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(edge_count(&g), 2);
        assert!(!g.has_edge(0, 2));

        let g = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(edge_count(&g), 3);

        let k1 = Graph::complete(1).unwrap();
        let g = k1.disjoint_union(&k1).unwrap().disjoint_union(&k1).unwrap();
        assert_eq!((g.order(), edge_count(&g)), (3, 0));
    }

    #[test]
    fn join_examples() {
        let star = Graph::complete(1).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((star.order(), edge_count(&star)), (5, 4));

        let k5 = Graph::complete(2).unwrap().join(&Graph::complete(3).unwrap()).unwrap();
        assert!(k5.is_complete());
        assert_eq!(edge_count(&k5), 10);

        // K_3 v (K_4 u 5*K_1): 3 + 6 + 3*9 = 36 edges.
        let inner = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::empty(5).unwrap())
            .unwrap();
        let g = Graph::complete(3).unwrap().join(&inner).unwrap();
        assert_eq!((g.order(), edge_count(&g)), (12, 36));
    }

    #[test]
    fn split_family_build() {
        let p = SplitFamilyParams::new(3, 4, 5).unwrap();
        let g = build_split_family(&p).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(edge_count(&g), 36);
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 6, 6, 6, 6, 11, 11, 11]);

        let k2 = build_split_family(&SplitFamilyParams::new(1, 1, 0).unwrap()).unwrap();
        assert!(k2.is_complete());
        assert_eq!(k2.order(), 2);

        let g = build_split_family(&SplitFamilyParams::new(6, 2, 8).unwrap()).unwrap();
        assert_eq!(g.order(), 16);
        for v in 8..16 {
            assert_eq!(g.degree(v), 6);
        }

        assert!(SplitFamilyParams::new(0, 1, 2).is_err());
        assert!(SplitFamilyParams::new(2, 0, 2).is_err());
    }

    #[test]
    fn split_family_recognition() {
        let p = SplitFamilyParams::new(3, 4, 5).unwrap();
        let g = build_split_family(&p).unwrap();
        assert_eq!(match_split_family(&g), Some(p));

        assert_eq!(match_split_family(&Graph::cycle(5).unwrap()), None);
        assert_eq!(match_split_family(&Graph::complete(7).unwrap()), None);

        // Clique part of size 1 collapses into the independent part.
        let p = SplitFamilyParams::new(2, 1, 3).unwrap();
        let g = build_split_family(&p).unwrap();
        assert_eq!(match_split_family(&g), Some(p));
    }

    #[test]
    fn split_family_recognition_survives_relabeling() {
        let p = SplitFamilyParams::new(2, 3, 4).unwrap();
        let g = build_split_family(&p).unwrap();
        let perm: Vec<usize> = vec![8, 0, 5, 2, 7, 1, 6, 3, 4];
        let h = g.relabeled(&perm).unwrap();
        assert_eq!(match_split_family(&h), Some(p));
    }

    #[test]
    fn relabel_rejects_non_bijections() {
        let g = Graph::path(3).unwrap();
        assert!(g.relabeled(&[0, 0, 1]).is_err());
        assert!(g.relabeled(&[0, 1]).is_err());
    }

    #[test]
    fn induced_subgraph() {
        let g = Graph::cycle(5).unwrap();
        let h = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!(edge_count(&h), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
    }
}
