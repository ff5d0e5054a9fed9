//! Exact combinatorial invariants: edge and component counts, rational
//! toughness with a minimizing witness, the tough-ness decision, and the
//! search for cut sets violating the `c(G-S) <= (cap-2)|S| + 2` condition.
//!
//! Toughness is the minimum of `|S| / c(G-S)` over vertex sets `S` with
//! `c(G-S) >= 2` (infinite for complete graphs). The search enumerates
//! candidate subsets in increasing size with two sound prunes: the best ratio
//! achievable at size `s` is `s / c_max(s)` where `c_max(s)` caps the
//! component count by both `n - s` and a degree-sum bound, so sizes that
//! cannot beat the incumbent are skipped, and the scan stops once
//! `s / (n - s)` reaches the incumbent. Correctness is guarded by an
//! unpruned oracle in the test suites.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Builds the exact rational `num / den`.
pub fn ratio(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph of order {0} has no cut structure; order >= 2 required")]
    OrderTooSmall(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("degree cap {0} too small; this condition needs cap >= 3")]
    DegreeCapTooSmall(usize),
}

pub fn edge_count(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).sum::<usize>() / 2
}

/// Number of connected components of `G - removed`.
pub(crate) fn components_excluding(g: &Graph, removed: &VertexSet) -> usize {
    let n = g.order();
    if n <= 64 {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut alive = full & !removed.word(0);
        let mut count = 0;
        while alive != 0 {
            let seed = alive & alive.wrapping_neg();
            let mut comp = 0u64;
            let mut frontier = seed;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= g.neighbors(v).word(0);
                }
                frontier = next & alive & !comp;
            }
            alive &= !comp;
            count += 1;
        }
        count
    } else {
        let mut alive = VertexSet::full(n);
        alive.subtract(removed);
        let mut count = 0;
        while let Some(seed) = alive.first() {
            let mut comp = VertexSet::EMPTY;
            let mut frontier = VertexSet::singleton(seed);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next.union_with(g.neighbors(v));
                }
                next.intersect_with(&alive);
                next.subtract(&comp);
                frontier = next;
            }
            alive.subtract(&comp);
            count += 1;
        }
        count
    }
}

pub fn component_count(g: &Graph) -> usize {
    components_excluding(g, &VertexSet::EMPTY)
}

/// Number of connected components after deleting the given vertices.
pub fn component_count_excluding(g: &Graph, removed: &[usize]) -> usize {
    components_excluding(g, &VertexSet::from_slice(removed))
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) == 1
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut alive = VertexSet::full(n);
    let mut out = Vec::new();
    while let Some(seed) = alive.first() {
        let mut comp = VertexSet::EMPTY;
        let mut frontier = VertexSet::singleton(seed);
        while !frontier.is_empty() {
            comp.union_with(&frontier);
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next.union_with(g.neighbors(v));
            }
            next.subtract(&comp);
            frontier = next;
        }
        alive.subtract(&comp);
        out.push(comp.to_vec());
    }
    out
}

/// Calls `f` with each `k`-subset of `0..n` in lexicographic order until `f`
/// returns `false`.
pub(crate) fn each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToughnessValue {
    Finite(Rational),
    /// Complete graphs have no cut set; their toughness is taken as infinite.
    Infinite,
}

impl ToughnessValue {
    pub fn at_least(&self, tau: &Rational) -> bool {
        match self {
            ToughnessValue::Infinite => true,
            ToughnessValue::Finite(v) => v >= tau,
        }
    }
}

impl std::fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ToughnessValue::Infinite => write!(f, "inf"),
            ToughnessValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: ToughnessValue,
    /// A cut set attaining the minimum (empty exactly for disconnected
    /// graphs, absent for complete graphs).
    pub witness: Option<Vec<usize>>,
    /// `c(G - witness)`.
    pub witness_components: Option<usize>,
}

/// Sorted degrees (descending) and their prefix sums of `degree - 1`, used
/// for the component-count upper bound `c(G-S) <= c(G) + sum_{v in S} (d(v)-1)`.
fn degree_surplus_prefix(g: &Graph) -> Vec<usize> {
    let mut degs = g.degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut prefix = Vec::with_capacity(degs.len() + 1);
    prefix.push(0);
    let mut acc = 0usize;
    for d in degs {
        acc += d.saturating_sub(1);
        prefix.push(acc);
    }
    prefix
}

/// Exact toughness with a minimizing witness. Order 1 is rejected: a single
/// vertex has no cut set and is not covered by the complete-graph convention.
pub fn toughness(g: &Graph) -> Result<ToughnessResult, InvariantError> {
    let n = g.order();
    if n < 2 {
        return Err(InvariantError::OrderTooSmall(n));
    }
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: ToughnessValue::Infinite,
            witness: None,
            witness_components: None,
        });
    }
    let base_components = component_count(g);
    if base_components >= 2 {
        // S = {} already attains ratio 0, which nothing can beat.
        return Ok(ToughnessResult {
            value: ToughnessValue::Finite(ratio(0, 1)),
            witness: Some(Vec::new()),
            witness_components: Some(base_components),
        });
    }
    let surplus = degree_surplus_prefix(g);
    // Incumbent as an exact fraction (size, components).
    let mut best: Option<(u64, u64, Vec<usize>)> = None;
    for s in 1..=n - 2 {
        if let Some((bs, bc, _)) = &best {
            // s/(n-s) only grows with s; once it reaches the incumbent, stop.
            if (s as u64) * bc >= bs * (n - s) as u64 {
                break;
            }
        }
        let c_max = (n - s).min(1 + surplus[s]);
        if c_max < 2 {
            continue;
        }
        if let Some((bs, bc, _)) = &best {
            if (s as u64) * bc >= bs * c_max as u64 {
                continue;
            }
        }
        each_combination(n, s, |subset| {
            let removed = VertexSet::from_slice(subset);
            let c = components_excluding(g, &removed) as u64;
            if c >= 2 {
                let better = match &best {
                    None => true,
                    Some((bs, bc, _)) => (s as u64) * bc < bs * c,
                };
                if better {
                    best = Some((s as u64, c, subset.to_vec()));
                }
            }
            true
        });
    }
    let (s, c, witness) = best.expect("non-complete connected graphs have a cut set");
    Ok(ToughnessResult {
        value: ToughnessValue::Finite(ratio(s, c)),
        witness: Some(witness),
        witness_components: Some(c as usize),
    })
}

/// Finds a set violating `|S| >= tau * c(G-S)`, i.e. a witness that the
/// graph is not `tau`-tough, or `None` if the condition holds everywhere.
pub fn tough_violation(
    g: &Graph,
    tau: &Rational,
) -> Result<Option<(Vec<usize>, usize)>, InvariantError> {
    let n = g.order();
    if n < 2 {
        return Err(InvariantError::OrderTooSmall(n));
    }
    if tau <= &ratio(0, 1) {
        return Ok(None);
    }
    // A violation needs |S| * den < num * c; compare in u128 when possible.
    let num = tau.numer();
    let den = tau.denom();
    let small = num.to_u64().zip(den.to_u64());
    let violates = |s: usize, c: usize| -> bool {
        match small {
            Some((p, q)) => (s as u128) * (q as u128) < (p as u128) * (c as u128),
            None => BigInt::from(s) * den < num * BigInt::from(c),
        }
    };
    if component_count(g) >= 2 {
        return Ok(Some((Vec::new(), component_count(g))));
    }
    let surplus = degree_surplus_prefix(g);
    let mut found = None;
    for s in 1..=n.saturating_sub(2) {
        if !violates(s, n - s) {
            break;
        }
        let c_max = (n - s).min(1 + surplus[s]);
        if c_max < 2 || !violates(s, c_max) {
            continue;
        }
        each_combination(n, s, |subset| {
            let removed = VertexSet::from_slice(subset);
            let c = components_excluding(g, &removed);
            if c >= 2 && violates(s, c) {
                found = Some((subset.to_vec(), c));
                return false;
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// Whether `|S| >= tau * c(G-S)` holds for every `S` with `c(G-S) >= 2`.
pub fn is_tough(g: &Graph, tau: &Rational) -> Result<bool, InvariantError> {
    if g.is_complete() {
        return Ok(true);
    }
    Ok(tough_violation(g, tau)?.is_none())
}

/// Searches a connected graph for a nonempty `S` with
/// `c(G-S) >= (cap-2)|S| + 3`. When witnesses exist, the returned one
/// maximizes `c(G-S) - (cap-2)|S|`, ties broken by smaller `|S|`, then
/// lexicographically (the enumeration order guarantees the tie-breaks).
pub fn win_violation(g: &Graph, cap: usize) -> Result<Option<Vec<usize>>, InvariantError> {
    if cap < 3 {
        return Err(InvariantError::DegreeCapTooSmall(cap));
    }
    if !is_connected(g) {
        return Err(InvariantError::Disconnected);
    }
    let n = g.order();
    let surplus = degree_surplus_prefix(g);
    // c(G-S) <= n - s forces s <= (n-3)/(cap-1) for any violation.
    let s_max = n.saturating_sub(3) / (cap - 1);
    let mut best: Option<(i64, Vec<usize>)> = None;
    for s in 1..=s_max {
        let c_max = (n - s).min(1 + surplus[s]);
        let threshold = (cap - 2) * s + 3;
        if c_max < threshold {
            continue;
        }
        each_combination(n, s, |subset| {
            let removed = VertexSet::from_slice(subset);
            let c = components_excluding(g, &removed);
            if c >= threshold {
                let score = c as i64 - ((cap - 2) * s) as i64;
                if best.as_ref().is_none_or(|(bs, _)| score > *bs) {
                    best = Some((score, subset.to_vec()));
                }
            }
            true
        });
    }
    Ok(best.map(|(_, w)| w))
}
