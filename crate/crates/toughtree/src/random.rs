//! Seeded graph sampling for spot checks and randomized test corpora.
//!
//! The generator is a hand-rolled SplitMix64 rather than an external RNG so
//! that seeded reports stay byte-stable across toolchain and dependency
//! upgrades. Always echo the seed next to anything sampled with it.

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound` (multiply-shift; bias is negligible
    /// for the small bounds used here).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.f64() < p
    }
}

/// Random graph: each pair is an edge independently with probability `p`.
pub fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are simple")
}

/// Random connected graph: a random tree skeleton (each vertex attaches to a
/// uniformly chosen earlier vertex) plus independent extra edges.
pub fn random_connected_graph(rng: &mut SplitMix64, n: usize, extra_p: f64) -> Graph {
    let mut edges = Vec::new();
    let mut present = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.below(v as u64) as usize;
        edges.push((u, v));
        present.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.chance(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are simple")
}

/// The complete graph on `n` vertices with `deletions` distinct random edges
/// removed.
pub fn complete_minus_random_edges(rng: &mut SplitMix64, n: usize, deletions: usize) -> Graph {
    let mut all: Vec<(usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            all.push((u, v));
        }
    }
    let deletions = deletions.min(all.len());
    // Partial Fisher-Yates: move the deleted edges to the front.
    for i in 0..deletions {
        let j = i + rng.below((all.len() - i) as u64) as usize;
        all.swap(i, j);
    }
    Graph::from_edges(n, &all[deletions..]).expect("remaining edges are simple")
}

pub fn random_permutation(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}
