//! Desk-scale verification suites. Each returns a [`SuiteReport`] whose
//! instances follow input order regardless of scheduling.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{check_mycielski_criticality, criticality_with_colorings, ColoringCertificate};
use crate::constructions::{iterated_mycielski, join_universal, mycielski};
use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::{
    chvatal_hamiltonian_condition, closure, hamiltonian_cycle, hamiltonian_endpoint_sets, hamiltonian_path,
    is_hamiltonian_connected, ore_hc_condition, path_condition, HcCertificate,
};
use crate::iso::is_self_complementary;
use crate::lift::{mycielski_hc_certificate, prop7_path, CaseId, MethodTally};
use crate::report::{g6, Certificate, Counterexample, Instance, SuiteReport, Verdict};

pub const SUITES: [&str; 5] = ["theorem5", "theorem9", "theorem11", "prop7", "conditions"];

/// Runs `f` on a dedicated pool of `jobs` workers, or the global pool.
pub fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::invalid("--jobs must be at least 1")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// A graph from a corpus file, with its line number.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub line: usize,
    pub graph: Graph,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub source: String,
    pub graphs: Vec<CorpusGraph>,
}

struct Audit {
    inst: Instance,
    bad: Vec<Counterexample>,
}

impl Audit {
    fn new(label: impl Into<String>, g: &Graph) -> Audit {
        Audit { inst: Instance::new(label, g), bad: Vec::new() }
    }

    fn fail(&mut self, g: &Graph, module: &str, check: &str, detail: impl Into<String>, pair: Option<(usize, usize)>) {
        self.bad.push(Counterexample {
            graph6: g6(g),
            module: module.into(),
            check: check.into(),
            detail: detail.into(),
            pair,
        });
    }

    fn expect(&mut self, ok: bool, g: &Graph, module: &str, check: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(g, module, check, detail(), None);
        }
    }

    fn cert(&mut self, c: Certificate) {
        self.inst.certificates.push(c);
    }

    fn done(mut self) -> (Instance, Vec<Counterexample>) {
        self.inst.verdict = Verdict::from_ok(self.bad.is_empty());
        (self.inst, self.bad)
    }
}

fn assemble(report: &mut SuiteReport, results: Vec<(Instance, Vec<Counterexample>)>) {
    for (inst, bad) in results {
        report.instances.push(inst);
        report.counterexamples.extend(bad);
    }
}

fn hc_cert(g: &Graph, c: &HcCertificate) -> Certificate {
    Certificate::HamiltonianConnected { graph6: g6(g), witnesses: c.witnesses.clone() }
}

fn coloring_cert(g: &Graph, c: &ColoringCertificate) -> Certificate {
    Certificate::Coloring { graph6: g6(g), k: c.k, colors: c.colors.clone() }
}

fn elapsed(start: Instant, stamp: bool) -> Option<u64> {
    stamp.then(|| start.elapsed().as_millis() as u64)
}

// ---------------------------------------------------------------- theorem5

/// Orders with a built-in self-complementary corpus.
pub const THEOREM5_ORDERS: [usize; 4] = [4, 5, 8, 9];

/// Self-complementary graphs: Hamiltonian path for `n > 3`, Hamiltonian-
/// connected square for `n >= 5`, plus the structural facts the proof uses.
pub fn theorem5(orders: &[usize], corpus: Option<&Corpus>, stamp: bool) -> Result<SuiteReport> {
    let start = Instant::now();
    let (mut report, inputs): (SuiteReport, Vec<(String, Graph)>) = match corpus {
        Some(c) => (
            SuiteReport::new("theorem5", c.source.clone()),
            c.graphs.iter().map(|cg| (format!("line {}", cg.line), cg.graph.clone())).collect(),
        ),
        None => {
            let mut r = SuiteReport::new("theorem5", "built-in");
            let mut inputs = Vec::new();
            let mut counts = BTreeMap::new();
            for &n in orders {
                if n == 0 || n > corpus::MAX_EXHAUSTIVE_ORDER + 1 {
                    return Err(Error::invalid(format!("theorem5 built-in orders are 1..=9, got {n}")));
                }
                let gs = corpus::self_complementary_graphs(n)?;
                counts.insert(n.to_string(), gs.len());
                inputs.extend(gs.into_iter().enumerate().map(|(i, g)| (format!("n={n} #{i}"), g)));
            }
            r.summary("self_complementary_counts", &counts);
            (r, inputs)
        }
    };
    let results: Vec<_> = inputs.par_iter().map(|(label, g)| theorem5_instance(label, g)).collect::<Result<_>>()?;
    assemble(&mut report, results);
    report.finish(elapsed(start, stamp));
    Ok(report)
}

fn theorem5_instance(label: &str, g: &Graph) -> Result<(Instance, Vec<Counterexample>)> {
    let n = g.order();
    let mut a = Audit::new(label, g);
    match is_self_complementary(g) {
        Some(c) => a.cert(Certificate::SelfComplementary { graph6: g6(g), perm: c.perm }),
        None => a.fail(g, "graph-core", "self_complementary", "graph is not isomorphic to its complement", None),
    }
    a.expect(n % 4 <= 1, g, "graph-core", "order_mod_4", || format!("order {n} is 2 or 3 mod 4"));
    let ds = g.degree_sequence();
    let identity = (1..=n).all(|k| ds.d(k) + ds.d(n + 1 - k) == n - 1);
    a.expect(identity, g, "graph-core", "degree_complement_identity", || {
        format!("degree sequence {:?} violates d_k + d_(n+1-k) = n-1", ds.as_slice())
    });
    let diameter = g.distances().diameter();
    let profile = g.connectivity();
    a.inst.fact("degree_sequence", ds.as_slice());
    a.inst.fact("diameter", diameter);
    a.inst.fact("cut_vertices", &profile.cut_vertices);
    a.inst.fact("two_connected", profile.two_connected);
    if n >= 2 {
        a.inst.fact("path_condition", path_condition(&ds)?);
    }
    if n >= 5 {
        a.expect(matches!(diameter, Some(2) | Some(3)), g, "graph-core", "diameter_2_or_3", || {
            format!("diameter is {diameter:?}")
        });
        if diameter == Some(2) {
            a.expect(g.power(2)?.is_complete(), g, "graph-core", "diameter_2_square_complete", || {
                "diameter 2 but the square is not complete".into()
            });
        }
    }
    if n > 3 {
        match hamiltonian_path(g)? {
            Some(p) => a.cert(Certificate::HamiltonianPath { graph6: g6(g), path: p, endpoints: None }),
            None => a.fail(g, "hamiltonian", "hamiltonian_path", "no Hamiltonian path", None),
        }
    }
    if n >= 5 {
        let sq = g.power(2)?;
        let hc = is_hamiltonian_connected(&sq)?;
        if hc.is_connected() {
            a.cert(hc_cert(&sq, &hc));
        } else {
            a.fail(
                g,
                "hamiltonian",
                "square_hamiltonian_connected",
                "square has a pair without a Hamiltonian path",
                hc.bad_pair,
            );
        }
    }
    Ok(a.done())
}

// ---------------------------------------------------------------- theorem9

pub const THEOREM9_MAX_K: usize = 5;

/// `M_k` is `k`-critical for `k = 2..=max_k`; each step is also checked as
/// an instance of "critical in, critical out" for `mu`.
pub fn theorem9(max_k: usize, stamp: bool) -> Result<SuiteReport> {
    if !(2..=THEOREM9_MAX_K).contains(&max_k) {
        return Err(Error::invalid(format!("--max-k must be in 2..={THEOREM9_MAX_K}, got {max_k}")));
    }
    let start = Instant::now();
    let mut report = SuiteReport::new("theorem9", "built-in");
    let mut results = Vec::new();
    for k in 2..=max_k {
        let g = iterated_mycielski(k)?;
        let mut a = Audit::new(format!("M_{k}"), &g);
        let (rep, cols) = criticality_with_colorings(&g)?;
        a.inst.fact("order", g.order());
        a.inst.fact("size", g.size());
        a.inst.fact("chi", rep.chi);
        a.inst.fact("vertex_deletions", rep.per_vertex.len());
        a.inst.fact("edge_deletions", rep.per_edge.len());
        a.expect(rep.chi == k, &g, "coloring", "chromatic_number", || format!("chi(M_{k}) = {}", rep.chi));
        for bad in rep.out_of_range() {
            a.fail(&g, "coloring", "deletion_drop_at_most_one", bad, None);
        }
        for (v, &c) in rep.per_vertex.iter().enumerate() {
            if c + 1 != rep.chi {
                a.fail(&g, "coloring", "vertex_critical", format!("chi(M_{k} - {v}) = {c}"), None);
            }
        }
        for e in &rep.per_edge {
            if e.chi + 1 != rep.chi {
                a.fail(
                    &g,
                    "coloring",
                    "edge_critical",
                    format!("chi(M_{k} - {}{}) = {}", e.u, e.v, e.chi),
                    Some((e.u, e.v)),
                );
            }
        }
        a.cert(coloring_cert(&g, &cols.base));
        for (v, c) in cols.per_vertex.iter().enumerate() {
            a.cert(coloring_cert(&g.remove_vertex(v)?, c));
        }
        for (e, c) in rep.per_edge.iter().zip(&cols.per_edge) {
            a.cert(coloring_cert(&g.without_edge(e.u, e.v)?, c));
        }
        results.push(a.done());
    }
    // mu of a critical graph outside the M_k chain.
    let c7 = crate::constructions::cycle(7)?;
    let mut a = Audit::new("mu(C_7)", &mycielski(&c7)?.0);
    let lifted = check_mycielski_criticality(&c7)?;
    a.inst.fact("base_chi", lifted.base.chi);
    a.inst.fact("lifted_chi", lifted.lifted.chi);
    a.expect(lifted.holds, &c7, "coloring", "mycielski_preserves_criticality", || {
        format!("mu(C_7) has chi {} and critical = {}", lifted.lifted.chi, lifted.lifted.critical)
    });
    results.push(a.done());
    assemble(&mut report, results);
    report.finish(elapsed(start, stamp));
    Ok(report)
}

// ---------------------------------------------------------------- theorem11

pub const THEOREM11_MAX_N: usize = corpus::MAX_EXHAUSTIVE_ORDER;

#[derive(Clone, Debug)]
pub struct Theorem11Options {
    /// Exhaustive Hamiltonian-connected classes for `3..=max_n`.
    pub max_n: usize,
    /// Random Hamiltonian-connected graphs per order in `random_orders`.
    pub random: usize,
    pub random_orders: Vec<usize>,
    pub seed: u64,
}

impl Default for Theorem11Options {
    fn default() -> Self {
        Theorem11Options { max_n: 6, random: 0, random_orders: vec![7, 8], seed: 1 }
    }
}

/// Every pair of `mu(G)` gets a lifted, verified Hamiltonian path, and the
/// exact solver on `mu(G)` agrees that every pair is joined.
pub fn theorem11(opts: &Theorem11Options, corpus: Option<&Corpus>, stamp: bool) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut inputs: Vec<(String, Graph)> = Vec::new();
    let mut report;
    match corpus {
        Some(c) => {
            report = SuiteReport::new("theorem11", c.source.clone());
            let keep: Vec<bool> = c
                .graphs
                .par_iter()
                .map(|cg| {
                    let g = &cg.graph;
                    g.order() >= 3
                        && g.order() <= crate::hamiltonian::MAX_DP_ORDER
                        && is_hamiltonian_connected(g).map(|h| h.is_connected()).unwrap_or(false)
                })
                .collect();
            for (cg, k) in c.graphs.iter().zip(keep) {
                if k {
                    inputs.push((format!("line {}", cg.line), cg.graph.clone()));
                }
            }
            report.summary("skipped_not_hamiltonian_connected", c.graphs.len() - inputs.len());
        }
        None => {
            if !(3..=THEOREM11_MAX_N).contains(&opts.max_n) {
                return Err(Error::invalid(format!("--max-n must be in 3..={THEOREM11_MAX_N}, got {}", opts.max_n)));
            }
            report = SuiteReport::new("theorem11", "built-in");
            let mut counts = BTreeMap::new();
            for n in 3..=opts.max_n {
                let gs = corpus::hamiltonian_connected_graphs(n)?;
                counts.insert(n.to_string(), gs.len());
                inputs.extend(gs.into_iter().enumerate().map(|(i, g)| (format!("n={n} #{i}"), g)));
            }
            report.summary("hamiltonian_connected_classes", &counts);
            for &n in &opts.random_orders {
                if opts.random == 0 {
                    break;
                }
                if !(3..=11).contains(&n) {
                    return Err(Error::invalid(format!("random orders must be in 3..=11, got {n}")));
                }
                let gs = corpus::random_hamiltonian_connected(n, opts.random, opts.seed.wrapping_add(n as u64))?;
                inputs.extend(gs.into_iter().enumerate().map(|(i, g)| (format!("random n={n} #{i}"), g)));
            }
            if opts.random > 0 {
                report.summary("random_per_order", opts.random);
                report.summary("random_orders", &opts.random_orders);
                report.summary("seed", opts.seed);
            }
        }
    }

    let results: Vec<Theorem11Row> =
        inputs.par_iter().map(|(label, g)| theorem11_instance(label, g)).collect::<Result<_>>()?;
    let mut even = MethodTally::default();
    let mut all = MethodTally::default();
    let mut by_case: BTreeMap<CaseId, MethodTally> = BTreeMap::new();
    let mut plain = Vec::with_capacity(results.len());
    for (inst, bad, tally, cases, is_even) in results {
        all.merge(&tally);
        if is_even {
            even.merge(&tally);
            for (c, t) in cases {
                by_case.entry(c).or_default().merge(&t);
            }
        }
        plain.push((inst, bad));
    }
    report.summary("lift_tally", all);
    report.summary("even_order_tally", even);
    report.summary("even_order_by_case", &by_case);
    report.summary("even_order_pattern_rate", pattern_rate(&even));
    assemble(&mut report, plain);
    report.finish(elapsed(start, stamp));
    Ok(report)
}

/// Fraction of lifts produced by a pattern; 1 when there were none.
pub fn pattern_rate(t: &MethodTally) -> f64 {
    if t.total() == 0 {
        1.0
    } else {
        t.pattern as f64 / t.total() as f64
    }
}

/// Instance, counterexamples, lift tally, tally by case, even base order.
type Theorem11Row = (Instance, Vec<Counterexample>, MethodTally, BTreeMap<CaseId, MethodTally>, bool);

fn theorem11_instance(label: &str, g: &Graph) -> Result<Theorem11Row> {
    let (mu, _) = mycielski(g)?;
    let mut a = Audit::new(label, g);
    a.inst.fact("order", g.order());
    a.inst.fact("mu_graph6", g6(&mu));
    let (tally, by_case) = match mycielski_hc_certificate(g) {
        Ok(cert) => {
            if let Err(e) = cert.certificate.verify(&mu) {
                a.fail(g, "mycielski-paths", "witness_verification", e, None);
            }
            // Independent cross-check: the exact solver on mu(G) itself.
            let sets = hamiltonian_endpoint_sets(&mu)?;
            let m = mu.order();
            let missing: Vec<(usize, usize)> =
                (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).filter(|&(u, v)| sets[u] >> v & 1 == 0).collect();
            if let Some(&p) = missing.first() {
                a.fail(
                    g,
                    "mycielski-paths",
                    "dp_agreement",
                    format!("{} pairs witnessed but rejected by the solver", missing.len()),
                    Some(p),
                );
            }
            a.inst.fact("pairs", cert.certificate.witnesses.len());
            a.inst.fact("tally", cert.tally);
            a.inst.fact("by_case", &cert.by_case);
            a.cert(hc_cert(&mu, &cert.certificate));
            (cert.tally, cert.by_case)
        }
        Err(Error::NotHamiltonianConnected { pair }) => {
            a.fail(g, "hamiltonian", "base_hamiltonian_connected", "input is not Hamiltonian-connected", pair);
            Default::default()
        }
        Err(e) => {
            a.fail(g, "mycielski-paths", "lift", e.to_string(), None);
            Default::default()
        }
    };
    let (inst, bad) = a.done();
    Ok((inst, bad, tally, by_case, g.order().is_multiple_of(2)))
}

// ---------------------------------------------------------------- prop 7

pub const PROP7_MAX_N: usize = 30;

/// The formula path of `mu(P_n)` for `n = 2..=max_n`.
pub fn prop7(max_n: usize, stamp: bool) -> Result<SuiteReport> {
    if !(2..=PROP7_MAX_N).contains(&max_n) {
        return Err(Error::invalid(format!("--max-n must be in 2..={PROP7_MAX_N}, got {max_n}")));
    }
    let start = Instant::now();
    let mut report = SuiteReport::new("prop7", "built-in");
    let results: Vec<_> = (2..=max_n)
        .into_par_iter()
        .map(|n| -> Result<_> {
            let (mu, lab) = mycielski(&crate::constructions::path(n)?)?;
            let mut a = Audit::new(format!("mu(P_{n})"), &mu);
            match prop7_path(n) {
                Ok(p) => {
                    let end = if n % 2 == 0 { lab.x(n - 1) } else { lab.y(n - 3) };
                    a.expect(p.len() == 2 * n + 1, &mu, "mycielski-paths", "length", || format!("length {}", p.len()));
                    a.inst.fact("endpoints", (lab.x(0), end));
                    a.cert(Certificate::HamiltonianPath { graph6: g6(&mu), path: p, endpoints: Some((lab.x(0), end)) });
                }
                Err(e) => a.fail(&mu, "mycielski-paths", "prop7_formula", e.to_string(), None),
            }
            Ok(a.done())
        })
        .collect::<Result<_>>()?;
    assemble(&mut report, results);
    report.finish(elapsed(start, stamp));
    Ok(report)
}

// ---------------------------------------------------------------- conditions

#[derive(Clone, Debug)]
pub struct ConditionsOptions {
    /// Degree conditions, closure, coloring drops, degree and parity facts.
    pub max_n: usize,
    /// Square and cube checks.
    pub power_max_n: usize,
}

impl Default for ConditionsOptions {
    fn default() -> Self {
        ConditionsOptions { max_n: 7, power_max_n: 8 }
    }
}

/// One-directional soundness of the classical conditions and the related
/// structural facts, over every connected graph class.
pub fn conditions(opts: &ConditionsOptions, stamp: bool) -> Result<SuiteReport> {
    let top = opts.max_n.max(opts.power_max_n);
    if top > corpus::MAX_EXHAUSTIVE_ORDER || opts.max_n == 0 {
        return Err(Error::invalid(format!(
            "--max-n and --power-max-n must be in 1..={}",
            corpus::MAX_EXHAUSTIVE_ORDER
        )));
    }
    let start = Instant::now();
    let mut report = SuiteReport::new("conditions", "built-in");
    let mut inputs = Vec::new();
    for n in 1..=top {
        let gs = corpus::connected_graphs(n)?;
        inputs.extend(gs.into_iter().enumerate().map(|(i, g)| (format!("n={n} #{i}"), g)));
    }
    let results: Vec<_> =
        inputs.par_iter().map(|(label, g)| conditions_instance(label, g, opts)).collect::<Result<_>>()?;
    let mut applied: BTreeMap<String, usize> = BTreeMap::new();
    for (inst, _) in &results {
        for (k, v) in &inst.facts {
            if v == &serde_json::Value::Bool(true) {
                *applied.entry(k.clone()).or_default() += 1;
            }
        }
    }
    report.summary("premise_counts", &applied);
    assemble(&mut report, results);
    report.finish(elapsed(start, stamp));
    Ok(report)
}

fn conditions_instance(label: &str, g: &Graph, opts: &ConditionsOptions) -> Result<(Instance, Vec<Counterexample>)> {
    let n = g.order();
    let mut a = Audit::new(label, g);
    if n <= opts.max_n {
        let ds = g.degree_sequence();
        let cycle = if n >= 3 { hamiltonian_cycle(g)? } else { None };
        let hpath = hamiltonian_path(g)?;
        if let Some(c) = &cycle {
            a.cert(Certificate::HamiltonianCycle { graph6: g6(g), cycle: c.clone() });
        }
        if let Some(p) = &hpath {
            a.cert(Certificate::HamiltonianPath { graph6: g6(g), path: p.clone(), endpoints: None });
        }
        if n > 3 && chvatal_hamiltonian_condition(&ds)? {
            a.inst.fact("chvatal", true);
            a.expect(cycle.is_some(), g, "hamiltonian", "chvatal_implies_hamiltonian", || {
                "no Hamiltonian cycle".into()
            });
        }
        if n >= 2 && path_condition(&ds)? {
            a.inst.fact("path_condition", true);
            a.expect(hpath.is_some(), g, "hamiltonian", "path_condition_implies_path", || "no Hamiltonian path".into());
        }
        let hc = if n >= 2 { Some(is_hamiltonian_connected(g)?) } else { None };
        let is_hc = hc.as_ref().is_some_and(|h| h.is_connected());
        if let Some(h) = hc.as_ref().filter(|h| h.is_connected()) {
            a.inst.fact("hamiltonian_connected", true);
            a.cert(hc_cert(g, h));
        }
        if n >= 3 && ore_hc_condition(g)? {
            a.inst.fact("ore", true);
            a.expect(is_hc, g, "hamiltonian", "ore_implies_hamiltonian_connected", || {
                "not Hamiltonian-connected".into()
            });
        }
        if n >= 3 {
            let cl = closure(g);
            let cl_cycle = hamiltonian_cycle(&cl)?;
            if let Some(c) = &cl_cycle {
                a.cert(Certificate::HamiltonianCycle { graph6: g6(&cl), cycle: c.clone() });
            }
            a.expect(cycle.is_some() == cl_cycle.is_some(), g, "hamiltonian", "closure_equivalence", || {
                format!("G Hamiltonian = {}, closure Hamiltonian = {}", cycle.is_some(), cl_cycle.is_some())
            });
        }
        if n >= 2 {
            let joined = join_universal(g)?;
            let jc = hamiltonian_cycle(&joined)?;
            a.expect(hpath.is_some() == jc.is_some(), g, "constructions", "universal_join_equivalence", || {
                format!("path in G = {}, cycle in G + K_1 = {}", hpath.is_some(), jc.is_some())
            });
        }
        if g.size() > 0 {
            let (rep, _) = criticality_with_colorings(g)?;
            for bad in rep.out_of_range() {
                a.fail(g, "coloring", "deletion_drop_at_most_one", bad, None);
            }
        }
        if is_hc && n >= 4 {
            a.expect(g.min_degree() >= 3, g, "hamiltonian", "hc_min_degree_3", || {
                format!("min degree {}", g.min_degree())
            });
        }
        if is_hc && n >= 3 {
            a.expect(!g.is_bipartite(), g, "hamiltonian", "hc_not_bipartite", || "bipartite".into());
        }
    }
    if (3..=opts.power_max_n).contains(&n) {
        if g.connectivity().two_connected {
            a.inst.fact("two_connected", true);
            let sq = g.power(2)?;
            let h = is_hamiltonian_connected(&sq)?;
            if h.is_connected() {
                a.cert(hc_cert(&sq, &h));
            } else {
                a.fail(g, "hamiltonian", "square_of_2_connected", "square is not Hamiltonian-connected", h.bad_pair);
            }
        }
        let cube = g.power(3)?;
        let h = is_hamiltonian_connected(&cube)?;
        if h.is_connected() {
            a.cert(hc_cert(&cube, &h));
        } else {
            a.fail(g, "hamiltonian", "cube_of_connected", "cube is not Hamiltonian-connected", h.bad_pair);
        }
    }
    Ok(a.done())
}
