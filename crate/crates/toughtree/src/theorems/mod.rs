//! Predicates for the three sufficient conditions (size, adjacency spectral
//! radius, signless Laplacian spectral radius), verification checks for the
//! supporting lemmas, the proof-polynomial audit, and the stream scanner.

mod checks;
mod polynomials;
mod scan;

pub use checks::{
    check_bound_das, check_bound_hong, check_lemma_edge_max, check_lemma_spectral_max,
    check_lemma_win, check_theorem_1, check_theorem_2, check_theorem_3, CheckOptions,
};
pub use polynomials::{audit_proof_polynomials, PolynomialAudit};
pub use scan::{
    reverify_counterexample, scan_stream, CheckSelection, ScanInput, ScanOptions, ScanRecord,
    ScanReport,
};

use crate::graph::{build_split_family, Graph, SplitFamilyParams};
use crate::invariants::Rational;
use crate::ktree::KTreeCertificate;
use crate::spectral::SpectralEnclosure;
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoremError {
    #[error("degree cap must be >= 3, got {0}")]
    DegreeCapTooSmall(usize),
    #[error("toughness scale must be >= 1, got {0}")]
    ScaleTooSmall(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph violates a check precondition: {0}")]
    Precondition(String),
}

/// The pair (degree cap k, toughness scale t) parameterizing the checks. The
/// required toughness is `t / (t(k-2) + 1)`, which sits in
/// `[1/(k-1), 1/(k-2))` for every valid pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremParams {
    pub degree_cap: usize,
    pub tough_scale: usize,
}

impl TheoremParams {
    pub fn new(degree_cap: usize, tough_scale: usize) -> Result<Self, TheoremError> {
        if degree_cap < 3 {
            return Err(TheoremError::DegreeCapTooSmall(degree_cap));
        }
        if tough_scale < 1 {
            return Err(TheoremError::ScaleTooSmall(tough_scale));
        }
        Ok(TheoremParams {
            degree_cap,
            tough_scale,
        })
    }

    /// `t / (t(k-2) + 1)` as an exact rational.
    pub fn required_toughness(&self) -> Rational {
        let t = BigInt::from(self.tough_scale);
        let k = BigInt::from(self.degree_cap);
        Rational::new(t.clone(), t * (k - 2) + 1)
    }
}

/// The order gates and size bound of the three conditions, evaluated exactly
/// for one (params, order) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdSet {
    /// Smallest order at which the size condition applies:
    /// `ceil((3tk^3 - (9t-2)k^2 + (6t-5)k + 6) / (k-2)^2)`.
    pub min_order_edge: usize,
    /// Smallest order for the adjacency spectral condition: `3kt + k - 3t + 6`.
    pub min_order_adjacency: usize,
    /// Smallest order for the signless Laplacian condition:
    /// `3kt^2 + k + 18t + 4`.
    pub min_order_signless: usize,
    /// Required toughness `t / (t(k-2) + 1)` rendered exactly.
    pub required_toughness: String,
    /// The size bound `C(n - 3t(k-2) - 2, 2) + 3t(3t(k-2) + 2)` at this order.
    pub edge_bound: i128,
    /// Parameters of the boundary graph `K_{3t} v (K_{n-3t(k-1)-2} u
    /// (3t(k-2)+2) K_1)` at this order, when the order admits one.
    pub extremal: Option<SplitFamilyParams>,
}

fn binom2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// `ceil(a / b)` for positive `b`.
fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i128::from(a.rem_euclid(b) != 0)
}

/// The size bound of the first condition at order `n`, evaluated literally
/// (meaningful once `n` clears the order gate).
pub fn edge_bound(params: &TheoremParams, n: usize) -> i128 {
    let k = params.degree_cap as i128;
    let t = params.tough_scale as i128;
    binom2(n as i128 - 3 * t * (k - 2) - 2) + 3 * t * (3 * t * (k - 2) + 2)
}

/// Smallest order at which the size condition applies.
pub fn min_order_edge(params: &TheoremParams) -> usize {
    let k = params.degree_cap as i128;
    let t = params.tough_scale as i128;
    let numerator = 3 * t * k * k * k - (9 * t - 2) * k * k + (6 * t - 5) * k + 6;
    ceil_div(numerator, (k - 2) * (k - 2)) as usize
}

/// Smallest order for the adjacency spectral condition.
pub fn min_order_adjacency(params: &TheoremParams) -> usize {
    let k = params.degree_cap;
    let t = params.tough_scale;
    3 * k * t + k + 6 - 3 * t
}

/// Smallest order for the signless Laplacian condition.
pub fn min_order_signless(params: &TheoremParams) -> usize {
    let k = params.degree_cap;
    let t = params.tough_scale;
    3 * k * t * t + k + 18 * t + 4
}

/// Parameters of the boundary graph at order `n`: hubs `3t`, clique part
/// `n - 3t(k-1) - 2`, independents `3t(k-2) + 2`. `None` when the clique
/// part would be empty.
pub fn extremal_params(params: &TheoremParams, n: usize) -> Option<SplitFamilyParams> {
    let k = params.degree_cap;
    let t = params.tough_scale;
    let hubs = 3 * t;
    let independents = 3 * t * (k - 2) + 2;
    if n < 3 * t * (k - 1) + 3 {
        return None; // clique part would be empty
    }
    let clique = n - 3 * t * (k - 1) - 2;
    SplitFamilyParams::new(hubs, clique, independents).ok()
}

/// Builds the boundary graph at order `n`, when the order admits one.
pub fn extremal_graph(params: &TheoremParams, n: usize) -> Option<Graph> {
    extremal_params(params, n).and_then(|p| build_split_family(&p).ok())
}

/// Evaluates every threshold formula exactly for one (params, order) pair.
pub fn thresholds(params: &TheoremParams, n: usize) -> ThresholdSet {
    ThresholdSet {
        min_order_edge: min_order_edge(params),
        min_order_adjacency: min_order_adjacency(params),
        min_order_signless: min_order_signless(params),
        required_toughness: params.required_toughness().to_string(),
        edge_bound: edge_bound(params, n),
        extremal: extremal_params(params, n),
    }
}

/// Identifier of one check, as it appears in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckId {
    #[serde(rename = "theorem-1")]
    Theorem1,
    #[serde(rename = "theorem-2")]
    Theorem2,
    #[serde(rename = "theorem-3")]
    Theorem3,
    #[serde(rename = "lemma-win")]
    LemmaWin,
    #[serde(rename = "lemma-edge-max")]
    LemmaEdgeMax,
    #[serde(rename = "lemma-spectral-max")]
    LemmaSpectralMax,
    #[serde(rename = "bound-hong")]
    BoundHong,
    #[serde(rename = "bound-das")]
    BoundDas,
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CheckId::Theorem1 => "theorem-1",
            CheckId::Theorem2 => "theorem-2",
            CheckId::Theorem3 => "theorem-3",
            CheckId::LemmaWin => "lemma-win",
            CheckId::LemmaEdgeMax => "lemma-edge-max",
            CheckId::LemmaSpectralMax => "lemma-spectral-max",
            CheckId::BoundHong => "bound-hong",
            CheckId::BoundDas => "bound-das",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    /// The statement's hypothesis does not hold for this input; nothing is
    /// claimed.
    HypothesisFailed,
    /// The checked inequality or implication held (lemma/bound checks).
    Holds,
    /// The hypothesis held and a spanning tree within the cap was found.
    HoldsWithKtree,
    /// The hypothesis held and the graph is the boundary graph itself.
    HoldsExtremalMatch,
    /// The statement failed on this input; the verdict carries a
    /// re-checkable witness bundle.
    Counterexample,
    /// A search hit its deadline; the verdict is unresolved, never guessed.
    UnknownTimeout,
    /// Certified comparison could not separate the two sides at the
    /// refinement cap.
    Indistinguishable,
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VerdictStatus::HypothesisFailed => "hypothesis_failed",
            VerdictStatus::Holds => "holds",
            VerdictStatus::HoldsWithKtree => "holds_with_ktree",
            VerdictStatus::HoldsExtremalMatch => "holds_extremal_match",
            VerdictStatus::Counterexample => "counterexample",
            VerdictStatus::UnknownTimeout => "unknown_timeout",
            VerdictStatus::Indistinguishable => "indistinguishable",
        };
        write!(f, "{s}")
    }
}

/// Everything needed to re-check a failed verdict from scratch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleBundle {
    /// graph6 when the order permits, otherwise the edge-list text.
    pub graph: String,
    pub graph_format: &'static str,
    pub toughness_value: Option<String>,
    pub toughness_witness: Option<Vec<usize>>,
    /// Hash of the exact spanning-tree search transcript.
    pub ktree_transcript_hash: String,
    pub ktree_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    CutSet(Vec<usize>),
    Certificate(KTreeCertificate),
    Enclosures {
        left: SpectralEnclosure,
        right: SpectralEnclosure,
    },
    Counterexample(Box<CounterexampleBundle>),
}

/// One key/value line of a verdict's numeric audit trail. Values are
/// rendered deterministically so reports are byte-stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditItem {
    pub key: &'static str,
    pub value: String,
}

/// Outcome record of one check on one input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub check: CheckId,
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    pub audit: Vec<AuditItem>,
}

impl Verdict {
    pub(crate) fn new(check: CheckId, status: VerdictStatus) -> Self {
        Verdict {
            check,
            status,
            witness: None,
            audit: Vec::new(),
        }
    }

    pub(crate) fn note(mut self, key: &'static str, value: impl ToString) -> Self {
        self.audit.push(AuditItem {
            key,
            value: value.to_string(),
        });
        self
    }

    pub(crate) fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn audit_value(&self, key: &str) -> Option<&str> {
        self.audit
            .iter()
            .find(|item| item.key == key)
            .map(|item| item.value.as_str())
    }
}
