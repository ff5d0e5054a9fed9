//! Applies one selected check to every graph of a stream, fanning the
//! per-graph work out to a worker pool while keeping the report order (and
//! the report bytes) identical for any worker count.

use super::checks::{check_theorem_2_with_extremal, check_theorem_3_with_extremal};
use super::{
    check_bound_das, check_bound_hong, check_lemma_win, check_theorem_1, extremal_graph,
    CheckOptions, TheoremParams, Verdict, VerdictStatus,
};
use crate::graph::Graph;
use crate::io::write_graph6;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

#[derive(Debug, Clone)]
pub enum CheckSelection {
    Theorem1(TheoremParams),
    Theorem2(TheoremParams),
    Theorem3(TheoremParams),
    LemmaWin { degree_cap: usize },
    BoundHong,
    BoundDas,
}

impl CheckSelection {
    fn name(&self) -> &'static str {
        match self {
            CheckSelection::Theorem1(_) => "theorem-1",
            CheckSelection::Theorem2(_) => "theorem-2",
            CheckSelection::Theorem3(_) => "theorem-3",
            CheckSelection::LemmaWin { .. } => "lemma-win",
            CheckSelection::BoundHong => "bound-hong",
            CheckSelection::BoundDas => "bound-das",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub tol: f64,
    pub ktree_timeout: Option<Duration>,
    pub workers: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            tol: 1e-9,
            ktree_timeout: None,
            workers: 1,
        }
    }
}

/// One stream item: a graph, or an upstream error to carry into the report.
#[derive(Debug, Clone)]
pub enum ScanInput {
    Graph(Graph),
    Error(String),
}

/// One line of the scan report.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ScanRecord {
    pub index: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

/// Aggregated outcome of a scan.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ScanReport {
    pub check: &'static str,
    pub total_records: u64,
    pub graphs_checked: u64,
    pub status_counts: BTreeMap<String, u64>,
    pub stream_errors: u64,
    pub check_errors: u64,
    pub unknowns: u64,
    /// Full records of every counterexample (each carries its witness
    /// bundle in the verdict).
    pub counterexamples: Vec<ScanRecord>,
}

/// Memoized boundary graphs per order, shared read-mostly across workers.
struct ExtremalCache {
    params: TheoremParams,
    by_order: Mutex<std::collections::HashMap<usize, Option<std::sync::Arc<Graph>>>>,
}

impl ExtremalCache {
    fn new(params: TheoremParams) -> Self {
        ExtremalCache {
            params,
            by_order: Mutex::new(std::collections::HashMap::new()),
        }
    }

    fn get(&self, n: usize) -> Option<std::sync::Arc<Graph>> {
        let mut map = self.by_order.lock().expect("cache lock");
        map.entry(n)
            .or_insert_with(|| extremal_graph(&self.params, n).map(std::sync::Arc::new))
            .clone()
    }
}

fn run_check(
    g: &Graph,
    selection: &CheckSelection,
    opts: &CheckOptions,
    cache: Option<&ExtremalCache>,
) -> Result<Verdict, String> {
    match selection {
        CheckSelection::Theorem1(p) => Ok(check_theorem_1(g, p, opts)),
        CheckSelection::Theorem2(p) => {
            let ext = cache.and_then(|c| c.get(g.order()));
            Ok(check_theorem_2_with_extremal(g, p, opts, ext.as_deref()))
        }
        CheckSelection::Theorem3(p) => {
            let ext = cache.and_then(|c| c.get(g.order()));
            Ok(check_theorem_3_with_extremal(g, p, opts, ext.as_deref()))
        }
        CheckSelection::LemmaWin { degree_cap } => {
            check_lemma_win(g, *degree_cap, opts).map_err(|e| e.to_string())
        }
        CheckSelection::BoundHong => check_bound_hong(g, opts.tol).map_err(|e| e.to_string()),
        CheckSelection::BoundDas => check_bound_das(g, opts.tol).map_err(|e| e.to_string()),
    }
}

fn make_record(
    index: u64,
    input: &ScanInput,
    selection: &CheckSelection,
    opts: &CheckOptions,
    cache: Option<&ExtremalCache>,
) -> ScanRecord {
    match input {
        ScanInput::Error(message) => ScanRecord {
            index,
            graph6: None,
            error: Some(message.clone()),
            verdict: None,
        },
        ScanInput::Graph(g) => {
            let graph6 = write_graph6(g).ok();
            match run_check(g, selection, opts, cache) {
                Ok(verdict) => ScanRecord {
                    index,
                    graph6,
                    error: None,
                    verdict: Some(verdict),
                },
                Err(message) => ScanRecord {
                    index,
                    graph6,
                    error: Some(message),
                    verdict: None,
                },
            }
        }
    }
}

const CHUNK: usize = 256;

/// Runs the selected check on every stream item, invoking `sink` once per
/// record in input order, and returns the aggregate report. Per-graph
/// errors are isolated into their records; they never abort the scan.
pub fn scan_stream<I>(
    inputs: I,
    selection: &CheckSelection,
    opts: &ScanOptions,
    mut sink: impl FnMut(&ScanRecord),
) -> ScanReport
where
    I: IntoIterator<Item = ScanInput>,
{
    let check_opts = CheckOptions {
        tol: opts.tol,
        ktree_timeout: opts.ktree_timeout,
    };
    let cache = match selection {
        CheckSelection::Theorem2(p) | CheckSelection::Theorem3(p) => Some(ExtremalCache::new(*p)),
        _ => None,
    };
    let mut report = ScanReport {
        check: selection.name(),
        total_records: 0,
        graphs_checked: 0,
        status_counts: BTreeMap::new(),
        stream_errors: 0,
        check_errors: 0,
        unknowns: 0,
        counterexamples: Vec::new(),
    };
    let workers = opts.workers.max(1);
    let mut iter = inputs.into_iter();
    let mut next_index = 0u64;
    loop {
        let chunk: Vec<ScanInput> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let records: Vec<ScanRecord> = if workers == 1 || chunk.len() == 1 {
            chunk
                .iter()
                .enumerate()
                .map(|(i, input)| {
                    make_record(
                        next_index + i as u64,
                        input,
                        selection,
                        &check_opts,
                        cache.as_ref(),
                    )
                })
                .collect()
        } else {
            let slots: Vec<Mutex<Option<ScanRecord>>> =
                (0..chunk.len()).map(|_| Mutex::new(None)).collect();
            let cursor = AtomicUsize::new(0);
            std::thread::scope(|scope| {
                for _ in 0..workers.min(chunk.len()) {
                    scope.spawn(|| loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        if i >= chunk.len() {
                            break;
                        }
                        let record = make_record(
                            next_index + i as u64,
                            &chunk[i],
                            selection,
                            &check_opts,
                            cache.as_ref(),
                        );
                        *slots[i].lock().expect("slot lock") = Some(record);
                    });
                }
            });
            slots
                .into_iter()
                .map(|slot| slot.into_inner().expect("slot lock").expect("slot filled"))
                .collect()
        };
        next_index += chunk.len() as u64;
        for (record, input) in records.iter().zip(&chunk) {
            report.total_records += 1;
            match &record.verdict {
                Some(verdict) => {
                    report.graphs_checked += 1;
                    *report
                        .status_counts
                        .entry(verdict.status.to_string())
                        .or_insert(0) += 1;
                    match verdict.status {
                        VerdictStatus::Counterexample => {
                            report.counterexamples.push(record.clone());
                        }
                        VerdictStatus::UnknownTimeout => report.unknowns += 1,
                        _ => {}
                    }
                }
                None => match input {
                    ScanInput::Error(_) => report.stream_errors += 1,
                    ScanInput::Graph(_) => report.check_errors += 1,
                },
            }
            sink(record);
        }
    }
    report
}

/// Re-checks a counterexample record from scratch: the bundled graph is
/// re-parsed and the originating check re-run; the verdict must again be a
/// counterexample and its fresh search transcript must hash identically.
pub fn reverify_counterexample(
    record: &ScanRecord,
    selection: &CheckSelection,
    opts: &ScanOptions,
) -> bool {
    use super::Witness;
    let Some(verdict) = &record.verdict else {
        return false;
    };
    if verdict.status != VerdictStatus::Counterexample {
        return false;
    }
    let Some(Witness::Counterexample(bundle)) = &verdict.witness else {
        return false;
    };
    let graph = match bundle.graph_format {
        "graph6" => crate::io::parse_graph6(&bundle.graph).ok(),
        _ => crate::io::parse_edge_list(&bundle.graph).ok(),
    };
    let Some(graph) = graph else {
        return false;
    };
    let check_opts = CheckOptions {
        tol: opts.tol,
        ktree_timeout: opts.ktree_timeout,
    };
    let Ok(fresh) = run_check(&graph, selection, &check_opts, None) else {
        return false;
    };
    if fresh.status != VerdictStatus::Counterexample {
        return false;
    }
    match &fresh.witness {
        Some(Witness::Counterexample(fresh_bundle)) => {
            fresh_bundle.ktree_transcript_hash == bundle.ktree_transcript_hash
        }
        _ => false,
    }
}
