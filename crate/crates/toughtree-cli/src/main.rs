//! Command-line front end: invariants, construction, spanning-tree search,
//! theorem and lemma checks, stream scanning, and the proof-polynomial
//! audit, with machine-readable output.
//!
//! Exit codes: 0 success / no counterexample; 1 counterexample found;
//! 2 usage or input error; 3 a timeout or unresolved comparison occurred.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::cell::Cell;
use std::io::{BufRead, BufReader, Write};
use std::rc::Rc;
use std::time::Duration;
use toughtree::graph::{build_split_family, SplitFamilyParams};
use toughtree::invariants::{component_count, edge_count, toughness};
use toughtree::io::{
    read_stream, write_edge_list, write_graph6, GraphStream, StreamFormat, StreamMode,
};
use toughtree::ktree::{search_spanning_ktree, KTreeAnswer, SearchOptions};
use toughtree::spectral::{spectral_radius_any, MatrixKind};
use toughtree::theorems::{
    audit_proof_polynomials, check_lemma_edge_max, check_lemma_spectral_max, extremal_params,
    scan_stream, thresholds, CheckSelection, ScanInput, ScanOptions, ScanRecord, ScanReport,
    TheoremParams, Verdict, VerdictStatus,
};

const EXIT_OK: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_UNRESOLVED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "toughtree",
    version,
    about = "Exact toughness, certified spectral enclosures, spanning bounded-degree trees, and sufficient-condition verification for graph streams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Adjacency,
    SignlessLaplacian,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> MatrixKind {
        match k {
            KindArg::Adjacency => MatrixKind::Adjacency,
            KindArg::SignlessLaplacian => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Args)]
struct StreamArgs {
    /// Input path, or '-' for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
    format: FormatArg,
    /// Abort at the first malformed record (the default).
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// Report malformed records and keep going.
    #[arg(long)]
    lenient: bool,
}

impl StreamArgs {
    fn mode(&self) -> StreamMode {
        if self.lenient {
            StreamMode::Lenient
        } else {
            StreamMode::Strict
        }
    }

    fn format(&self) -> StreamFormat {
        match self.format {
            FormatArg::Graph6 => StreamFormat::Graph6,
            FormatArg::Edgelist => StreamFormat::EdgeList,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Tolerance for certified spectral comparisons.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Budget per spanning-tree search; on expiry the answer is reported as
    /// unknown, never guessed.
    #[arg(long)]
    timeout_ms: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = OutputArg::Table)]
    output: OutputArg,
}

impl CommonArgs {
    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            tol: self.tol,
            ktree_timeout: self.timeout_ms.map(Duration::from_millis),
            workers: self.workers,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Order gates, required toughness, size bound and boundary-family
    /// parameters for a (cap, scale) pair.
    Thresholds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Order at which to evaluate the size bound and family parameters.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        output: OutputArg,
    },
    /// Emit a split-family graph `K_s v (K_a u p*K_1)`, either from raw
    /// (s, a, p) or as the boundary family of a (cap, scale, order) triple.
    Construct {
        #[arg(long, requires = "t", requires = "n")]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "a", conflicts_with = "k")]
        s: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
        emit: FormatArg,
    },
    /// Per-graph order, size, components, exact toughness and certified
    /// spectral enclosures.
    Invariants {
        #[command(flatten)]
        stream: StreamArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Largest order for which exact toughness is attempted.
        #[arg(long, default_value_t = 20)]
        toughness_limit: usize,
    },
    /// Exact spanning bounded-degree tree search per stream graph.
    Ktree {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one of the three sufficient-condition checks over a stream.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        stream: StreamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check one supporting lemma: the cut condition or closed-form bounds
    /// over a graph stream, or the partition maximization lemmas for given
    /// or swept partitions.
    Lemmas {
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        /// Degree cap (cut-condition lemma).
        #[arg(long)]
        k: Option<usize>,
        /// Total order (partition lemmas).
        #[arg(long)]
        n: Option<usize>,
        /// Hub count (partition lemmas).
        #[arg(long)]
        s: Option<usize>,
        /// Comma-separated nonincreasing parts, e.g. 4,2,2.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// Part floor (spectral maximization lemma).
        #[arg(long, default_value_t = 1)]
        p_floor: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Sweep all partitions up to the given bounds instead of checking
        /// one instance.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_s: usize,
        #[arg(long, default_value_t = 5)]
        max_parts: usize,
        #[arg(long, default_value_t = 2)]
        max_p: usize,
        #[command(flatten)]
        stream: StreamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Scan a stream (or the built-in small-graph enumerator, or a seeded
    /// random sample) with a selected check.
    Scan {
        #[arg(long, value_enum)]
        check: ScanCheckArg,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Enumerate all connected labeled graphs of this order (<= 7)
        /// instead of reading a stream.
        #[arg(long)]
        enumerate: Option<usize>,
        /// Sample this many seeded random connected graphs instead of
        /// reading a stream.
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[command(flatten)]
        stream: StreamArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact-arithmetic audit of the proof-chain polynomials.
    Audit {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, conflicts_with_all = ["n_from", "n_to"])]
        n: Option<usize>,
        #[arg(long, requires = "n_to")]
        n_from: Option<usize>,
        #[arg(long)]
        n_to: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        output: OutputArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaArg {
    Win,
    EdgeMax,
    SpectralMax,
    Hong,
    Das,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanCheckArg {
    Theorem1,
    Theorem2,
    Theorem3,
    LemmaWin,
    BoundHong,
    BoundDas,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, String> {
    if path == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = std::fs::File::open(path).map_err(|e| format!("cannot open {path}: {e}"))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Lazy adapter from a graph stream to scan inputs. A malformed record in
/// strict mode (or an unreadable source) ends the stream and raises the
/// shared abort flag; lenient mode forwards malformed records as error
/// inputs.
struct StreamInputs {
    stream: GraphStream<Box<dyn BufRead>>,
    strict: bool,
    aborted: Rc<Cell<bool>>,
}

impl Iterator for StreamInputs {
    type Item = ScanInput;

    fn next(&mut self) -> Option<ScanInput> {
        match self.stream.next()? {
            Err(e) => {
                eprintln!("error: read error: {e}");
                self.aborted.set(true);
                None
            }
            Ok(record) => match record.result {
                Ok(graph) => Some(ScanInput::Graph(graph)),
                Err(e) => {
                    let message = format!("record {} (line {}): {e}", record.index, record.line);
                    if self.strict {
                        eprintln!("error: {message}");
                        self.aborted.set(true);
                        None
                    } else {
                        Some(ScanInput::Error(message))
                    }
                }
            },
        }
    }
}

fn stream_inputs(args: &StreamArgs) -> Result<(StreamInputs, Rc<Cell<bool>>), String> {
    let reader = open_input(&args.input)?;
    let aborted = Rc::new(Cell::new(false));
    Ok((
        StreamInputs {
            stream: read_stream(reader, args.format(), args.mode()),
            strict: args.mode() == StreamMode::Strict,
            aborted: Rc::clone(&aborted),
        },
        aborted,
    ))
}

fn exit_code_for(report: &ScanReport, stream_aborted: bool) -> i32 {
    if stream_aborted {
        EXIT_USAGE
    } else if !report.counterexamples.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else if report.unknowns > 0 {
        EXIT_UNRESOLVED
    } else {
        EXIT_OK
    }
}

fn verdict_exit_code(verdicts: &[Verdict]) -> i32 {
    if verdicts
        .iter()
        .any(|v| v.status == VerdictStatus::Counterexample)
    {
        EXIT_COUNTEREXAMPLE
    } else if verdicts.iter().any(|v| {
        matches!(
            v.status,
            VerdictStatus::UnknownTimeout | VerdictStatus::Indistinguishable
        )
    }) {
        EXIT_UNRESOLVED
    } else {
        EXIT_OK
    }
}

fn print_scan_record(out: &mut impl Write, record: &ScanRecord, output: OutputArg) {
    match output {
        OutputArg::Json => {
            let line = serde_json::to_string(record).expect("records serialize");
            writeln!(out, "{line}").expect("write to stdout");
        }
        OutputArg::Table => {
            let graph6 = record.graph6.as_deref().unwrap_or("-");
            match (&record.verdict, &record.error) {
                (Some(v), _) => {
                    writeln!(out, "#{} {} {} {}", record.index, v.check, v.status, graph6)
                        .expect("write to stdout");
                }
                (None, Some(e)) => {
                    writeln!(out, "#{} error {e}", record.index).expect("write to stdout");
                }
                (None, None) => unreachable!(),
            }
        }
    }
}

fn print_scan_summary(out: &mut impl Write, report: &ScanReport, output: OutputArg) {
    match output {
        OutputArg::Json => {
            let line = serde_json::to_string(report).expect("report serializes");
            writeln!(out, "{line}").expect("write to stdout");
        }
        OutputArg::Table => {
            let counts: Vec<String> = report
                .status_counts
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(
                out,
                "summary: check={} total={} checked={} {} stream_errors={} check_errors={}",
                report.check,
                report.total_records,
                report.graphs_checked,
                counts.join(" "),
                report.stream_errors,
                report.check_errors,
            )
            .expect("write to stdout");
        }
    }
}

fn run_scan(
    inputs: impl IntoIterator<Item = ScanInput>,
    selection: CheckSelection,
    common: &CommonArgs,
    aborted: Option<Rc<Cell<bool>>>,
    extra_summary: Option<String>,
) -> i32 {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let report = scan_stream(inputs, &selection, &common.scan_options(), |record| {
        print_scan_record(&mut out, record, common.output);
    });
    if let Some(extra) = extra_summary {
        writeln!(out, "{extra}").expect("write to stdout");
    }
    print_scan_summary(&mut out, &report, common.output);
    out.flush().expect("flush stdout");
    exit_code_for(&report, aborted.is_some_and(|a| a.get()))
}

fn theorem_params(k: usize, t: usize) -> Result<TheoremParams, String> {
    TheoremParams::new(k, t).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Thresholds { k, t, n, output } => {
            let params = theorem_params(k, t)?;
            let set = thresholds(&params, n.unwrap_or(0));
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            match output {
                OutputArg::Json => {
                    let mut value =
                        serde_json::to_value(&set).expect("thresholds serialize");
                    if n.is_none() {
                        // Without an order the bound and family are not meaningful.
                        value.as_object_mut().unwrap().remove("edge_bound");
                        value.as_object_mut().unwrap().remove("extremal");
                    }
                    writeln!(out, "{value}").expect("write to stdout");
                }
                OutputArg::Table => {
                    writeln!(
                        out,
                        "required_toughness={} min_order_edge={} min_order_adjacency={} min_order_signless={}",
                        set.required_toughness,
                        set.min_order_edge,
                        set.min_order_adjacency,
                        set.min_order_signless
                    )
                    .expect("write to stdout");
                    if let Some(n) = n {
                        writeln!(out, "order={n} edge_bound={}", set.edge_bound)
                            .expect("write to stdout");
                        match set.extremal {
                            Some(p) => writeln!(
                                out,
                                "extremal: hubs={} clique={} independents={}",
                                p.hubs, p.clique, p.independents
                            )
                            .expect("write to stdout"),
                            None => writeln!(out, "extremal: none at this order")
                                .expect("write to stdout"),
                        }
                    }
                }
            }
            out.flush().expect("flush stdout");
            Ok(EXIT_OK)
        }
        Command::Construct {
            k,
            t,
            n,
            s,
            a,
            p,
            emit,
        } => {
            let params = if let Some(k) = k {
                let params = theorem_params(k, t.expect("clap enforces --t"))?;
                let n = n.expect("clap enforces --n");
                extremal_params(&params, n).ok_or_else(|| {
                    format!("no boundary family of order {n} for cap {k}, scale {}", t.unwrap())
                })?
            } else if let Some(s) = s {
                SplitFamilyParams::new(s, a.expect("clap enforces --a"), p.unwrap_or(0))
                    .map_err(|e| e.to_string())?
            } else {
                return Err("give either --k/--t/--n or --s/--a/--p".into());
            };
            let graph = build_split_family(&params).map_err(|e| e.to_string())?;
            let text = match emit {
                FormatArg::Graph6 => {
                    let mut s = write_graph6(&graph).map_err(|e| e.to_string())?;
                    s.push('\n');
                    s
                }
                FormatArg::Edgelist => write_edge_list(&graph),
            };
            print!("{text}");
            Ok(EXIT_OK)
        }
        Command::Invariants {
            stream,
            common,
            toughness_limit,
        } => {
            let (inputs, aborted) = stream_inputs(&stream)?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            for (index, input) in inputs.enumerate() {
                match &input {
                    ScanInput::Error(e) => {
                        writeln!(out, "#{index} error {e}").expect("write to stdout");
                    }
                    ScanInput::Graph(g) => {
                        let n = g.order();
                        let tau = if n < 2 || n > toughness_limit {
                            "skipped".to_string()
                        } else {
                            toughness(g)
                                .map(|r| r.value.to_string())
                                .unwrap_or_else(|e| e.to_string())
                        };
                        let rho = spectral_radius_any(g, MatrixKind::Adjacency, common.tol)
                            .map_err(|e| e.to_string())?;
                        let q =
                            spectral_radius_any(g, MatrixKind::SignlessLaplacian, common.tol)
                                .map_err(|e| e.to_string())?;
                        match common.output {
                            OutputArg::Table => {
                                writeln!(
                                    out,
                                    "#{index} n={n} e={} comps={} tau={tau} rho=[{},{}] q=[{},{}]",
                                    edge_count(g),
                                    component_count(g),
                                    rho.lo,
                                    rho.hi,
                                    q.lo,
                                    q.hi
                                )
                                .expect("write to stdout");
                            }
                            OutputArg::Json => {
                                let value = serde_json::json!({
                                    "index": index,
                                    "order": n,
                                    "edges": edge_count(g),
                                    "components": component_count(g),
                                    "toughness": tau,
                                    "adjacency_radius": rho,
                                    "signless_radius": q,
                                });
                                writeln!(out, "{value}").expect("write to stdout");
                            }
                        }
                    }
                }
            }
            out.flush().expect("flush stdout");
            Ok(if aborted.get() { EXIT_USAGE } else { EXIT_OK })
        }
        Command::Ktree { k, stream, common } => {
            let (inputs, aborted) = stream_inputs(&stream)?;
            let opts = SearchOptions {
                timeout: common.timeout_ms.map(Duration::from_millis),
            };
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let mut unknowns = 0u64;
            for (index, input) in inputs.enumerate() {
                match &input {
                    ScanInput::Error(e) => {
                        writeln!(out, "#{index} error {e}").expect("write to stdout");
                    }
                    ScanInput::Graph(g) => match search_spanning_ktree(g, k, &opts) {
                        Err(e) => {
                            writeln!(out, "#{index} error {e}").expect("write to stdout");
                        }
                        Ok(report) => {
                            if matches!(report.answer, KTreeAnswer::Unknown) {
                                unknowns += 1;
                            }
                            match common.output {
                            OutputArg::Json => {
                                let answer = match &report.answer {
                                    KTreeAnswer::Found(c) => serde_json::json!({
                                        "index": index, "answer": "found",
                                        "edges": c.edges, "nodes": report.nodes,
                                        "transcript": format!("{:016x}", report.transcript_hash),
                                    }),
                                    KTreeAnswer::Absent => serde_json::json!({
                                        "index": index, "answer": "absent",
                                        "nodes": report.nodes,
                                        "transcript": format!("{:016x}", report.transcript_hash),
                                    }),
                                    KTreeAnswer::Unknown => serde_json::json!({
                                        "index": index, "answer": "unknown",
                                        "nodes": report.nodes,
                                    }),
                                };
                                writeln!(out, "{answer}").expect("write to stdout");
                            }
                            OutputArg::Table => match &report.answer {
                                KTreeAnswer::Found(c) => {
                                    writeln!(out, "#{index} found cap={k}").expect("write");
                                    write!(out, "{}", c.to_edge_list_text(g.order()))
                                        .expect("write to stdout");
                                }
                                KTreeAnswer::Absent => {
                                    writeln!(out, "#{index} absent cap={k}").expect("write");
                                }
                                KTreeAnswer::Unknown => {
                                    writeln!(out, "#{index} unknown cap={k}").expect("write");
                                }
                            },
                        }
                        }
                    },
                }
            }
            out.flush().expect("flush stdout");
            Ok(if aborted.get() {
                EXIT_USAGE
            } else if unknowns > 0 {
                EXIT_UNRESOLVED
            } else {
                EXIT_OK
            })
        }
        Command::Check {
            theorem,
            k,
            t,
            stream,
            common,
        } => {
            let params = theorem_params(k, t)?;
            let selection = match theorem {
                1 => CheckSelection::Theorem1(params),
                2 => CheckSelection::Theorem2(params),
                _ => CheckSelection::Theorem3(params),
            };
            let (inputs, aborted) = stream_inputs(&stream)?;
            Ok(run_scan(inputs, selection, &common, Some(aborted), None))
        }
        Command::Lemmas {
            lemma,
            k,
            n,
            s,
            parts,
            p_floor,
            kind,
            sweep,
            max_n,
            max_s,
            max_parts,
            max_p,
            stream,
            common,
        } => match lemma {
            LemmaArg::Win => {
                let cap = k.ok_or("--k is required for the cut-condition lemma")?;
                let (inputs, aborted) = stream_inputs(&stream)?;
                Ok(run_scan(
                    inputs,
                    CheckSelection::LemmaWin { degree_cap: cap },
                    &common,
                    Some(aborted),
                    None,
                ))
            }
            LemmaArg::Hong => {
                let (inputs, aborted) = stream_inputs(&stream)?;
                Ok(run_scan(inputs, CheckSelection::BoundHong, &common, Some(aborted), None))
            }
            LemmaArg::Das => {
                let (inputs, aborted) = stream_inputs(&stream)?;
                Ok(run_scan(inputs, CheckSelection::BoundDas, &common, Some(aborted), None))
            }
            LemmaArg::EdgeMax => {
                let verdicts = if sweep {
                    sweep_edge_max(max_n, max_s, max_parts)?
                } else {
                    let n = n.ok_or("--n is required")?;
                    let s = s.ok_or("--s is required")?;
                    let parts = parts.ok_or("--parts is required")?;
                    vec![check_lemma_edge_max(n, s, &parts).map_err(|e| e.to_string())?]
                };
                print_verdicts(&verdicts, common.output);
                Ok(verdict_exit_code(&verdicts))
            }
            LemmaArg::SpectralMax => {
                let verdicts = if sweep {
                    sweep_spectral_max(max_n, max_s, max_p, common.tol)?
                } else {
                    let n = n.ok_or("--n is required")?;
                    let s = s.ok_or("--s is required")?;
                    let parts = parts.ok_or("--parts is required")?;
                    vec![
                        check_lemma_spectral_max(n, s, &parts, p_floor, kind.into(), common.tol)
                            .map_err(|e| e.to_string())?,
                    ]
                };
                print_verdicts(&verdicts, common.output);
                Ok(verdict_exit_code(&verdicts))
            }
        },
        Command::Scan {
            check,
            k,
            t,
            enumerate,
            random,
            order,
            seed,
            edge_prob,
            stream,
            common,
        } => {
            let selection = match check {
                ScanCheckArg::Theorem1 => CheckSelection::Theorem1(theorem_params(
                    k.ok_or("--k is required")?,
                    t.ok_or("--t is required")?,
                )?),
                ScanCheckArg::Theorem2 => CheckSelection::Theorem2(theorem_params(
                    k.ok_or("--k is required")?,
                    t.ok_or("--t is required")?,
                )?),
                ScanCheckArg::Theorem3 => CheckSelection::Theorem3(theorem_params(
                    k.ok_or("--k is required")?,
                    t.ok_or("--t is required")?,
                )?),
                ScanCheckArg::LemmaWin => CheckSelection::LemmaWin {
                    degree_cap: k.ok_or("--k is required")?,
                },
                ScanCheckArg::BoundHong => CheckSelection::BoundHong,
                ScanCheckArg::BoundDas => CheckSelection::BoundDas,
            };
            let (inputs, aborted, extra): (
                Box<dyn Iterator<Item = ScanInput>>,
                Option<Rc<Cell<bool>>>,
                Option<String>,
            ) = if let Some(order) = enumerate {
                let graphs = toughtree::enumerate::connected_graphs(order)
                    .map_err(|e| e.to_string())?;
                (
                    Box::new(graphs.map(ScanInput::Graph)),
                    None,
                    Some(format!("enumerated: connected labeled graphs of order {order}")),
                )
            } else if let Some(count) = random {
                let mut rng = toughtree::random::SplitMix64::new(seed);
                let graphs: Vec<ScanInput> = (0..count)
                    .map(|_| {
                        ScanInput::Graph(toughtree::random::random_connected_graph(
                            &mut rng, order, edge_prob,
                        ))
                    })
                    .collect();
                (
                    Box::new(graphs.into_iter()),
                    None,
                    Some(format!(
                        "sampled: count={count} order={order} edge_prob={edge_prob} seed={seed}"
                    )),
                )
            } else {
                let (inputs, aborted) = stream_inputs(&stream)?;
                (Box::new(inputs), Some(aborted), None)
            };
            Ok(run_scan(inputs, selection, &common, aborted, extra))
        }
        Command::Audit {
            k,
            t,
            n,
            n_from,
            n_to,
            output,
        } => {
            let params = theorem_params(k, t)?;
            let orders: Vec<usize> = match (n, n_from, n_to) {
                (Some(n), _, _) => vec![n],
                (None, Some(from), Some(to)) if from <= to => (from..=to).collect(),
                (None, Some(_), Some(_)) => return Err("--n-from must be <= --n-to".into()),
                _ => return Err("give --n or --n-from/--n-to".into()),
            };
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let mut violated = false;
            for n in orders {
                let audit = audit_proof_polynomials(&params, n);
                violated |= !audit.all_evaluated_hold();
                match output {
                    OutputArg::Json => {
                        let line = serde_json::to_string(&audit).expect("audit serializes");
                        writeln!(out, "{line}").expect("write to stdout");
                    }
                    OutputArg::Table => {
                        let verdict = if audit.vacuous {
                            "vacuous".to_string()
                        } else if audit.all_evaluated_hold() {
                            "holds".to_string()
                        } else {
                            format!("VIOLATED: {}", audit.violations.join("; "))
                        };
                        writeln!(
                            out,
                            "n={n} s_range={:?} edge={} f={} g={} endpoint={} {verdict}",
                            (audit.s_lo, audit.s_hi),
                            audit
                                .edge_diff
                                .as_ref()
                                .map_or("-".into(), |e| format!("min_diff={}", e.min_difference)),
                            audit
                                .poly_f
                                .as_ref()
                                .map_or("-".into(), |f| format!("peak={}", f.lower_end_value)),
                            audit
                                .poly_g
                                .as_ref()
                                .map_or("-".into(), |g| format!("peak={}", g.lower_end_value)),
                            audit
                                .f_endpoint
                                .as_ref()
                                .map_or("-".into(), |e| e.difference.clone()),
                        )
                        .expect("write to stdout");
                    }
                }
            }
            out.flush().expect("flush stdout");
            Ok(if violated { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
    }
}

fn print_verdicts(verdicts: &[Verdict], output: OutputArg) {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for (i, v) in verdicts.iter().enumerate() {
        match output {
            OutputArg::Json => {
                let line = serde_json::to_string(v).expect("verdicts serialize");
                writeln!(out, "{line}").expect("write to stdout");
            }
            OutputArg::Table => {
                let audit: Vec<String> = v
                    .audit
                    .iter()
                    .map(|item| format!("{}={}", item.key, item.value))
                    .collect();
                writeln!(out, "#{i} {} {} {}", v.check, v.status, audit.join(" "))
                    .expect("write to stdout");
            }
        }
    }
    out.flush().expect("flush stdout");
}

fn nonincreasing_partitions(total: usize, parts: usize, floor: usize) -> Vec<Vec<usize>> {
    fn gen(
        total: usize,
        parts: usize,
        floor: usize,
        max_first: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.iter().rev().copied().collect());
            }
            return;
        }
        let hi = max_first.min(total.saturating_sub(floor * (parts - 1)));
        for first in floor..=hi {
            cur.push(first);
            gen(total - first, parts - 1, floor, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= floor * parts {
        gen(total, parts, floor, total, &mut Vec::new(), &mut out);
    }
    for p in out.iter_mut() {
        p.sort_unstable_by(|x, y| y.cmp(x));
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn sweep_edge_max(max_n: usize, max_s: usize, max_parts: usize) -> Result<Vec<Verdict>, String> {
    let mut verdicts = Vec::new();
    for n in 2..=max_n {
        for s in 1..=max_s.min(n - 1) {
            for t in 2..=max_parts {
                if n - s < t {
                    continue;
                }
                for parts in nonincreasing_partitions(n - s, t, 1) {
                    verdicts.push(check_lemma_edge_max(n, s, &parts).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    Ok(verdicts)
}

fn sweep_spectral_max(max_n: usize, max_s: usize, max_p: usize, tol: f64) -> Result<Vec<Verdict>, String> {
    let mut verdicts = Vec::new();
    for n in 2..=max_n {
        for s in 1..=max_s.min(n - 1) {
            for floor in 1..=max_p {
                let m = n - s;
                for t in 2..=m / floor.max(1) {
                    for parts in nonincreasing_partitions(m, t, floor) {
                        if parts[0] >= m - floor * (t - 1) {
                            continue;
                        }
                        for kind in [MatrixKind::Adjacency, MatrixKind::SignlessLaplacian] {
                            verdicts.push(
                                check_lemma_spectral_max(n, s, &parts, floor, kind, tol)
                                    .map_err(|e| e.to_string())?,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use toughtree::theorems::{AuditItem, CheckId};

    fn verdict(status: VerdictStatus) -> Verdict {
        Verdict {
            check: CheckId::LemmaEdgeMax,
            status,
            witness: None,
            audit: vec![AuditItem {
                key: "note",
                value: "x".into(),
            }],
        }
    }

    #[test]
    fn exit_codes_follow_the_documented_conditions() {
        assert_eq!(verdict_exit_code(&[verdict(VerdictStatus::Holds)]), EXIT_OK);
        assert_eq!(
            verdict_exit_code(&[verdict(VerdictStatus::Counterexample)]),
            EXIT_COUNTEREXAMPLE
        );
        assert_eq!(
            verdict_exit_code(&[
                verdict(VerdictStatus::Holds),
                verdict(VerdictStatus::UnknownTimeout)
            ]),
            EXIT_UNRESOLVED
        );
        assert_eq!(
            verdict_exit_code(&[
                verdict(VerdictStatus::Counterexample),
                verdict(VerdictStatus::UnknownTimeout)
            ]),
            EXIT_COUNTEREXAMPLE
        );
    }

    #[test]
    fn scan_exit_codes() {
        let mut report = ScanReport {
            check: "theorem-1",
            total_records: 1,
            graphs_checked: 1,
            status_counts: Default::default(),
            stream_errors: 0,
            check_errors: 0,
            unknowns: 0,
            counterexamples: Vec::new(),
        };
        assert_eq!(exit_code_for(&report, false), EXIT_OK);
        assert_eq!(exit_code_for(&report, true), EXIT_USAGE);
        report.unknowns = 1;
        assert_eq!(exit_code_for(&report, false), EXIT_UNRESOLVED);
        report.counterexamples.push(ScanRecord {
            index: 0,
            graph6: None,
            error: None,
            verdict: None,
        });
        assert_eq!(exit_code_for(&report, false), EXIT_COUNTEREXAMPLE);
    }
}
