//! Certified enclosures for the adjacency spectral radius and the signless
//! Laplacian spectral radius, plus the two closed-form upper bounds used by
//! the verification checks.
//!
//! For a connected graph both matrices are nonnegative and irreducible, so
//! for any strictly positive vector `x` the ratios `(Mx)_i / x_i` bracket the
//! Perron root: `min_i (Mx)_i/x_i <= r(M) <= max_i (Mx)_i/x_i`. The iteration
//! refines `x` with the shifted matrix `M + I` (same Perron vector, and
//! primitive even when `M` itself is bipartite-periodic, so the iterate
//! always converges); the reported bounds are still the ratios for `M`
//! itself, so their validity never depends on how `x` was produced. The raw
//! bounds are widened by one unit in the last place per arithmetic stage to
//! absorb floating-point rounding.

use crate::graph::Graph;
use crate::invariants::{components, edge_count, is_connected};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("spectral enclosures need a connected graph; split into components first")]
    Disconnected,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("no convergence after {sweeps} sweeps (enclosure width {width:e})")]
    NoConvergence { sweeps: u64, width: f64 },
    #[error("bound requires minimum degree >= 1 (isolated vertex {0})")]
    IsolatedVertex(usize),
    #[error("bound requires order >= 2")]
    OrderTooSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    SignlessLaplacian,
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixKind::Adjacency => write!(f, "adjacency"),
            MatrixKind::SignlessLaplacian => write!(f, "signless_laplacian"),
        }
    }
}

/// A certified interval containing the spectral radius of the chosen matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralEnclosure {
    pub lo: f64,
    pub hi: f64,
    pub matrix_kind: MatrixKind,
}

impl SpectralEnclosure {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }
}

const MAX_SWEEPS: u64 = 1_000_000;

fn matvec(g: &Graph, kind: MatrixKind, degrees: &[usize], x: &[f64], y: &mut [f64]) {
    for i in 0..g.order() {
        let mut acc = 0.0;
        for j in g.neighbors(i).iter() {
            acc += x[j];
        }
        if kind == MatrixKind::SignlessLaplacian {
            acc += degrees[i] as f64 * x[i];
        }
        y[i] = acc;
    }
}

fn enclose(g: &Graph, kind: MatrixKind, tol: f64) -> Result<SpectralEnclosure, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if !is_connected(g) {
        return Err(SpectralError::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        // Both matrices are the 1x1 zero matrix.
        return Ok(SpectralEnclosure {
            lo: 0.0,
            hi: 0.0,
            matrix_kind: kind,
        });
    }
    let degrees = g.degrees();
    // Each ratio is a sum of at most n terms, one optional product, and one
    // division; widen by that many half-ulps relative.
    let margin = (n as f64 + 3.0) * f64::EPSILON;
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut width = f64::INFINITY;
    for _sweep in 1..=MAX_SWEEPS {
        matvec(g, kind, &degrees, &x, &mut y);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let lo = (lo * (1.0 - margin)).next_down().max(0.0);
        let hi = (hi * (1.0 + margin)).next_up();
        width = hi - lo;
        if width <= tol {
            return Ok(SpectralEnclosure {
                lo,
                hi,
                matrix_kind: kind,
            });
        }
        // Advance x with (M + I) x and renormalize in max-norm.
        let mut max = 0.0f64;
        for i in 0..n {
            y[i] += x[i];
            max = max.max(y[i]);
        }
        for i in 0..n {
            x[i] = y[i] / max;
        }
    }
    Err(SpectralError::NoConvergence {
        sweeps: MAX_SWEEPS,
        width,
    })
}

/// Certified enclosure of the largest adjacency eigenvalue of a connected
/// graph.
pub fn adjacency_spectral_radius(g: &Graph, tol: f64) -> Result<SpectralEnclosure, SpectralError> {
    enclose(g, MatrixKind::Adjacency, tol)
}

/// Certified enclosure of the largest signless Laplacian eigenvalue of a
/// connected graph.
pub fn signless_laplacian_spectral_radius(
    g: &Graph,
    tol: f64,
) -> Result<SpectralEnclosure, SpectralError> {
    enclose(g, MatrixKind::SignlessLaplacian, tol)
}

/// Enclosure for an arbitrary (possibly disconnected) graph: the maximum of
/// the per-component enclosures.
pub fn spectral_radius_any(
    g: &Graph,
    kind: MatrixKind,
    tol: f64,
) -> Result<SpectralEnclosure, SpectralError> {
    let mut best: Option<SpectralEnclosure> = None;
    for comp in components(g) {
        let sub = g.induced(&comp).expect("component vertices are in range");
        let e = enclose(&sub, kind, tol)?;
        best = Some(match best {
            None => e,
            Some(b) => SpectralEnclosure {
                lo: b.lo.max(e.lo),
                hi: b.hi.max(e.hi),
                matrix_kind: kind,
            },
        });
    }
    best.ok_or(SpectralError::Disconnected)
}

/// `sqrt(2 e(G) - n + 1)`, an upper bound on the adjacency spectral radius
/// of a graph with minimum degree >= 1, with equality exactly at stars and
/// complete graphs.
pub fn hong_bound(g: &Graph) -> Result<f64, SpectralError> {
    let n = g.order();
    for v in 0..n {
        if g.degree(v) == 0 {
            return Err(SpectralError::IsolatedVertex(v));
        }
    }
    let e = edge_count(g);
    // Minimum degree 1 forces 2e >= n, so the radicand is at least 1.
    let radicand = 2 * e + 1 - n;
    Ok((radicand as f64).sqrt())
}

/// `2 e(G) / (n - 1) + n - 2`, an upper bound on the signless Laplacian
/// spectral radius for graphs of order >= 2.
pub fn das_bound(g: &Graph) -> Result<f64, SpectralError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectralError::OrderTooSmall);
    }
    let e = edge_count(g);
    Ok(2.0 * e as f64 / (n as f64 - 1.0) + n as f64 - 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralOrdering {
    Less,
    Greater,
    IndistinguishableAtTol,
}

const REFINEMENT_CAP: u32 = 24;

/// Compares the spectral radii of two connected graphs by refining both
/// enclosures until they are disjoint. Hitting the refinement cap (or the
/// floating-point width floor) is not an error; it is the third verdict.
pub fn compare_spectral(
    g: &Graph,
    h: &Graph,
    kind: MatrixKind,
    tol: f64,
) -> Result<SpectralOrdering, SpectralError> {
    let mut cur = tol;
    for round in 0..REFINEMENT_CAP {
        let (a, b) = match (enclose(g, kind, cur), enclose(h, kind, cur)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(SpectralError::NoConvergence { .. }), _) | (_, Err(SpectralError::NoConvergence { .. }))
                if round > 0 =>
            {
                return Ok(SpectralOrdering::IndistinguishableAtTol);
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        if a.hi < b.lo {
            return Ok(SpectralOrdering::Less);
        }
        if b.hi < a.lo {
            return Ok(SpectralOrdering::Greater);
        }
        // Do not refine below what f64 widening can deliver.
        let n = g.order().max(h.order()) as f64;
        let floor = 8.0 * (n + 4.0) * f64::EPSILON * (a.hi.max(b.hi) + 1.0);
        if cur * 0.5 < floor {
            break;
        }
        cur *= 0.5;
    }
    Ok(SpectralOrdering::IndistinguishableAtTol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_split_family, SplitFamilyParams};

    const TOL: f64 = 1e-9;

    #[test]
    fn complete_graph_radii() {
        for n in 2..=12 {
            let g = Graph::complete(n).unwrap();
            let rho = adjacency_spectral_radius(&g, TOL).unwrap();
            assert!(rho.contains(n as f64 - 1.0), "rho(K_{n}) not enclosed");
            assert!(rho.width() <= TOL);
            let q = signless_laplacian_spectral_radius(&g, TOL).unwrap();
            assert!(q.contains(2.0 * n as f64 - 2.0), "q(K_{n}) not enclosed");
        }
    }

    #[test]
    fn cycle_radii() {
        for n in 3..=12 {
            let g = Graph::cycle(n).unwrap();
            assert!(adjacency_spectral_radius(&g, TOL).unwrap().contains(2.0));
            assert!(signless_laplacian_spectral_radius(&g, TOL).unwrap().contains(4.0));
        }
    }

    #[test]
    fn star_radii() {
        for m in 2..=12 {
            let g = Graph::star(m).unwrap();
            let rho = adjacency_spectral_radius(&g, TOL).unwrap();
            assert!(rho.contains((m as f64).sqrt()), "rho(K_1,{m})");
            let q = signless_laplacian_spectral_radius(&g, TOL).unwrap();
            assert!(q.contains(m as f64 + 1.0), "q(K_1,{m})");
        }
    }

    #[test]
    fn rejects_disconnected_and_bad_tolerance() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(
            adjacency_spectral_radius(&g, TOL).unwrap_err(),
            SpectralError::Disconnected
        );
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(
            adjacency_spectral_radius(&k3, 0.0).unwrap_err(),
            SpectralError::BadTolerance(_)
        ));
    }

    #[test]
    fn disconnected_max_over_components() {
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        let e = spectral_radius_any(&g, MatrixKind::Adjacency, TOL).unwrap();
        assert!(e.contains(3.0));
    }

    #[test]
    fn hong_bound_cases() {
        let k5 = Graph::complete(5).unwrap();
        let b = hong_bound(&k5).unwrap();
        assert!((b - 4.0).abs() < 1e-12);

        let star = Graph::star(4).unwrap();
        assert!((hong_bound(&star).unwrap() - 2.0).abs() < 1e-12);

        let p4 = Graph::path(4).unwrap();
        let b = hong_bound(&p4).unwrap();
        assert!((b - 3.0f64.sqrt()).abs() < 1e-12);
        let rho = adjacency_spectral_radius(&p4, TOL).unwrap();
        assert!(rho.hi < b);

        let isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(hong_bound(&isolated).unwrap_err(), SpectralError::IsolatedVertex(2));
    }

    #[test]
    fn das_bound_cases() {
        let k5 = Graph::complete(5).unwrap();
        assert!((das_bound(&k5).unwrap() - 8.0).abs() < 1e-12);

        let c4 = Graph::cycle(4).unwrap();
        let b = das_bound(&c4).unwrap();
        assert!((b - (8.0 / 3.0 + 2.0)).abs() < 1e-12);
        assert!(b >= 4.0);

        let star3 = Graph::star(3).unwrap();
        assert!((das_bound(&star3).unwrap() - 4.0).abs() < 1e-12);

        assert_eq!(das_bound(&Graph::complete(1).unwrap()).unwrap_err(), SpectralError::OrderTooSmall);
    }

    #[test]
    fn comparisons() {
        let c5 = Graph::cycle(5).unwrap();
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            compare_spectral(&c5, &k5, MatrixKind::Adjacency, TOL).unwrap(),
            SpectralOrdering::Less
        );
        assert_eq!(
            compare_spectral(&k5, &k5, MatrixKind::Adjacency, TOL).unwrap(),
            SpectralOrdering::IndistinguishableAtTol
        );
        let split = build_split_family(&SplitFamilyParams::new(3, 4, 5).unwrap()).unwrap();
        let k12 = Graph::complete(12).unwrap();
        assert_eq!(
            compare_spectral(&split, &k12, MatrixKind::Adjacency, TOL).unwrap(),
            SpectralOrdering::Less
        );
    }

    #[test]
    fn deterministic_enclosures() {
        let g = build_split_family(&SplitFamilyParams::new(2, 5, 4).unwrap()).unwrap();
        let a = adjacency_spectral_radius(&g, TOL).unwrap();
        let b = adjacency_spectral_radius(&g, TOL).unwrap();
        assert_eq!(a, b);
    }
}
