//! The `hamlab` command line, runnable in-process.
//!
//! Exit codes: 0 pass, 1 counterexample found, 2 usage or input error.

use std::io::BufRead;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coloring::{chromatic_number, criticality_with_colorings};
use crate::constructions::{iterated_mycielski, mycielski, standard_graph, StandardKind};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::hamiltonian::{closure, hamiltonian_cycle, hamiltonian_path_between, is_hamiltonian_connected};
use crate::iso::is_self_complementary;
use crate::report::{g6, verify_report, Certificate, Counterexample, InputError, Instance, SuiteReport, Verdict};
use crate::suites::{self, ConditionsOptions, Corpus, CorpusGraph, Theorem11Options};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hamlab", version, about = "Hamiltonicity, coloring and Mycielski-graph certificates")]
pub struct Cli {
    /// Worker threads for suites and sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Omit the timestamp and wall time so reports are byte-stable.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build graphs and print them as graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Decide a claim for every graph6 line of the input, with certificates.
    Certify {
        #[command(subcommand)]
        claim: Option<Claim>,
        /// Read graph6 lines from this file instead of standard input.
        #[arg(long, global = true)]
        corpus: Option<PathBuf>,
        /// Re-verify every certificate in a saved report instead.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Run a verification suite and print its JSON report.
    Suite {
        name: SuiteName,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        /// theorem5: orders to enumerate (repeatable).
        #[arg(long = "n")]
        orders: Vec<usize>,
        /// Graph6 file to use instead of the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// theorem11: random Hamiltonian-connected graphs per order 7 and 8.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// conditions: bound for the square and cube checks.
        #[arg(long)]
        power_max_n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    MycielskiOf { graph6: String },
    IteratedMycielski { k: usize },
    Power { graph6: String, k: usize },
    Complement { graph6: String },
    Closure { graph6: String },
    Standard { kind: String, n: usize },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Claim {
    Hamiltonian,
    HamiltonianPath { u: usize, v: usize },
    HamiltonianConnected,
    Chromatic,
    KCritical,
    SelfComplementary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Theorem5,
    Theorem9,
    Theorem11,
    Prop7,
    Conditions,
}

/// What a run printed and how it ended.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome { stderr: format!("hamlab: {msg}\n"), code: EXIT_USAGE, ..Default::default() }
    }

    fn report(r: &SuiteReport) -> Outcome {
        let code = if !r.input_errors.is_empty() {
            EXIT_USAGE
        } else if r.passed() {
            EXIT_PASS
        } else {
            EXIT_COUNTEREXAMPLE
        };
        Outcome { stdout: format!("{}\n", r.to_json()), code, ..Default::default() }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stderr: text, code: EXIT_USAGE, ..Default::default() }
            } else {
                Outcome { stdout: text, code: EXIT_PASS, ..Default::default() }
            };
        }
    };
    let stamp = !cli.no_timestamp;
    match cli.command {
        Command::Construct { what } => construct(what),
        Command::Certify { claim, corpus, verify } => {
            let lines = match (&verify, &claim) {
                (None, Some(_)) => match read_lines(corpus.as_deref(), stdin) {
                    Ok(lines) => lines,
                    Err(e) => return Outcome::usage(e),
                },
                _ => Vec::new(),
            };
            let r = suites::in_pool(cli.jobs, || match (verify, claim) {
                (Some(_), Some(_)) => Outcome::usage("--verify takes no claim"),
                (Some(path), None) => verify_file(&path, stamp),
                (None, Some(claim)) => certify(&claim, &lines, corpus.as_deref(), stamp),
                (None, None) => Outcome::usage("certify needs a claim or --verify <report>"),
            });
            r.unwrap_or_else(Outcome::usage)
        }
        Command::Suite { name, max_n, max_k, orders, corpus, random, seed, power_max_n } => {
            let corpus = match corpus.as_deref().map(load_corpus).transpose() {
                Ok(c) => c,
                Err(e) => return Outcome::usage(e),
            };
            let result = suites::in_pool(cli.jobs, || match name {
                SuiteName::Theorem5 => {
                    let orders = if orders.is_empty() { suites::THEOREM5_ORDERS.to_vec() } else { orders };
                    suites::theorem5(&orders, corpus.as_ref(), stamp)
                }
                SuiteName::Theorem9 => suites::theorem9(max_k.unwrap_or(5), stamp),
                SuiteName::Theorem11 => {
                    let opts = Theorem11Options { max_n: max_n.unwrap_or(6), random, seed, ..Default::default() };
                    suites::theorem11(&opts, corpus.as_ref(), stamp)
                }
                SuiteName::Prop7 => suites::prop7(max_n.unwrap_or(12), stamp),
                SuiteName::Conditions => {
                    let d = ConditionsOptions::default();
                    let opts = ConditionsOptions {
                        max_n: max_n.unwrap_or(d.max_n),
                        power_max_n: power_max_n.unwrap_or(d.power_max_n),
                    };
                    suites::conditions(&opts, stamp)
                }
            });
            match result.and_then(|r| r) {
                Ok(r) => Outcome::report(&r),
                Err(e) => Outcome::usage(e),
            }
        }
    }
}

fn construct(what: Construct) -> Outcome {
    let parse = |s: &str| parse_graph6(s);
    let built: Result<Graph, Error> = match what {
        Construct::MycielskiOf { graph6 } => parse(&graph6).and_then(|g| mycielski(&g)).map(|(m, _)| m),
        Construct::IteratedMycielski { k } => iterated_mycielski(k),
        Construct::Power { graph6, k } => {
            if !(2..=3).contains(&k) {
                Err(Error::invalid(format!("power must be 2 or 3, got {k}")))
            } else {
                parse(&graph6).and_then(|g| g.power(k))
            }
        }
        Construct::Complement { graph6 } => parse(&graph6).map(|g| g.complement()),
        Construct::Closure { graph6 } => parse(&graph6).map(|g| closure(&g)),
        Construct::Standard { kind, n } => kind.parse::<StandardKind>().and_then(|k| standard_graph(k, n)),
    };
    match built.and_then(|g| emit_graph6(&g)) {
        Ok(line) => Outcome { stdout: format!("{line}\n"), code: EXIT_PASS, ..Default::default() },
        Err(e) => Outcome::usage(e),
    }
}

fn read_lines(corpus: Option<&Path>, stdin: &mut dyn BufRead) -> Result<Vec<String>, String> {
    match corpus {
        Some(p) => std::fs::read_to_string(p)
            .map(|t| t.lines().map(str::to_string).collect())
            .map_err(|e| format!("cannot read {}: {e}", p.display())),
        None => stdin.lines().collect::<Result<_, _>>().map_err(|e| format!("cannot read standard input: {e}")),
    }
}

/// Loads a graph6 file; any malformed line makes the whole corpus unusable.
pub fn load_corpus(path: &Path) -> Result<Corpus, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read corpus {}: {e}", path.display()))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let graph = parse_graph6(line).map_err(|e| format!("{}:{}: {e}", path.display(), i + 1))?;
        graphs.push(CorpusGraph { line: i + 1, graph });
    }
    Ok(Corpus { source: path.display().to_string(), graphs })
}

fn claim_name(c: &Claim) -> String {
    match c {
        Claim::Hamiltonian => "hamiltonian".into(),
        Claim::HamiltonianPath { u, v } => format!("hamiltonian-path {u} {v}"),
        Claim::HamiltonianConnected => "hamiltonian-connected".into(),
        Claim::Chromatic => "chromatic".into(),
        Claim::KCritical => "k-critical".into(),
        Claim::SelfComplementary => "self-complementary".into(),
    }
}

fn certify(claim: &Claim, lines: &[String], corpus: Option<&Path>, stamp: bool) -> Outcome {
    let start = Instant::now();
    let source = corpus.map_or("stdin".to_string(), |p| p.display().to_string());
    let mut report = SuiteReport::new(format!("certify {}", claim_name(claim)), source);
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let lineno = i + 1;
        let outcome = parse_graph6(line).and_then(|g| certify_one(claim, &g, lineno));
        match outcome {
            Ok((inst, bad)) => {
                report.instances.push(inst);
                report.counterexamples.extend(bad);
            }
            Err(e) => report.input_errors.push(InputError { line: lineno, message: e.to_string() }),
        }
    }
    report.finish(stamp.then(|| start.elapsed().as_millis() as u64));
    Outcome::report(&report)
}

fn certify_one(claim: &Claim, g: &Graph, line: usize) -> Result<(Instance, Vec<Counterexample>), Error> {
    let n = g.order();
    let mut inst = Instance::new(format!("line {line}"), g);
    let mut bad = Vec::new();
    let mut fail = |module: &str, detail: String, pair: Option<(usize, usize)>| {
        bad.push(Counterexample { graph6: g6(g), module: module.into(), check: claim_name(claim), detail, pair })
    };
    match claim {
        Claim::Hamiltonian => {
            if n < 3 {
                fail("hamiltonian", format!("order {n} is below 3"), None);
            } else {
                match hamiltonian_cycle(g)? {
                    Some(c) => inst.certificates.push(Certificate::HamiltonianCycle { graph6: g6(g), cycle: c }),
                    None => fail("hamiltonian", "no Hamiltonian cycle".into(), None),
                }
            }
        }
        Claim::HamiltonianPath { u, v } => match hamiltonian_path_between(g, *u, *v)? {
            Some(p) => inst.certificates.push(Certificate::HamiltonianPath {
                graph6: g6(g),
                path: p,
                endpoints: Some((*u, *v)),
            }),
            None => fail("hamiltonian", format!("no Hamiltonian path from {u} to {v}"), Some((*u, *v))),
        },
        Claim::HamiltonianConnected => {
            let hc = is_hamiltonian_connected(g)?;
            if hc.is_connected() {
                inst.certificates.push(Certificate::HamiltonianConnected { graph6: g6(g), witnesses: hc.witnesses });
            } else {
                let detail = match hc.bad_pair {
                    Some((u, v)) => format!("no Hamiltonian path from {u} to {v}"),
                    None => format!("order {n} is below 2"),
                };
                fail("hamiltonian", detail, hc.bad_pair);
            }
        }
        Claim::Chromatic => {
            let c = chromatic_number(g);
            inst.fact("chi", c.k);
            inst.certificates.push(Certificate::Coloring { graph6: g6(g), k: c.k, colors: c.colors });
        }
        Claim::KCritical => {
            if g.size() == 0 {
                fail("coloring", "graph has no edges".into(), None);
            } else {
                let (rep, cols) = criticality_with_colorings(g)?;
                inst.fact("chi", rep.chi);
                inst.fact("per_vertex", &rep.per_vertex);
                inst.fact("per_edge", &rep.per_edge);
                if !rep.critical {
                    fail("coloring", format!("not {}-critical", rep.chi), None);
                }
                inst.certificates.push(Certificate::Coloring {
                    graph6: g6(g),
                    k: cols.base.k,
                    colors: cols.base.colors,
                });
                for (v, c) in cols.per_vertex.into_iter().enumerate() {
                    let h = g.remove_vertex(v)?;
                    inst.certificates.push(Certificate::Coloring { graph6: g6(&h), k: c.k, colors: c.colors });
                }
                for (e, c) in rep.per_edge.iter().zip(cols.per_edge) {
                    let h = g.without_edge(e.u, e.v)?;
                    inst.certificates.push(Certificate::Coloring { graph6: g6(&h), k: c.k, colors: c.colors });
                }
            }
        }
        Claim::SelfComplementary => match is_self_complementary(g) {
            Some(c) => inst.certificates.push(Certificate::SelfComplementary { graph6: g6(g), perm: c.perm }),
            None => fail("graph-core", "not isomorphic to its complement".into(), None),
        },
    }
    inst.verdict = Verdict::from_ok(bad.is_empty());
    Ok((inst, bad))
}

fn verify_file(path: &Path, stamp: bool) -> Outcome {
    let start = Instant::now();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("cannot read {}: {e}", path.display())),
    };
    let saved: SuiteReport = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("{} is not a report: {e}", path.display())),
    };
    let mut report = SuiteReport::new("certify --verify", path.display().to_string());
    for failure in verify_report(&saved) {
        report.counterexamples.push(Counterexample {
            graph6: String::new(),
            module: "certify".into(),
            check: "certificate".into(),
            detail: failure,
            pair: None,
        });
    }
    report.summary("verified_suite", &saved.suite);
    report.summary("certificates_checked", saved.certificate_count());
    report.finish(stamp.then(|| start.elapsed().as_millis() as u64));
    Outcome::report(&report)
}
