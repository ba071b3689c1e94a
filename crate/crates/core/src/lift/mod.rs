//! Hamiltonian paths in `mu(G)` built from Hamiltonian paths of `G`.
//!
//! A pair of `mu(G)` vertices is mapped to one of the canonical cases below,
//! swapping endpoints where needed (the returned path is reversed back).
//! `a` and `b` are base vertices; the base path is chosen to start at `a`,
//! so `a` plays `x_1`/`y_1` and base-path positions play the subscripts.
//!
//! | pair            | case    | base path needed                                   |
//! |-----------------|---------|----------------------------------------------------|
//! | `x_a`, `x_b`    | XX      | any `a`-`b` path                                   |
//! | `x_a`, `y_b`    | XY      | any `a`-`b` path                                   |
//! | `x_a`, `y_a`    | X1Y1    | `a`-`w`, `w ~ a`, even position `r < n` with `p_r ~ w` |
//! | `x_a`, `z`      | XZ      | same as X1Y1                                       |
//! | `y_a`, `z`      | YZ      | `a`-`w` with `w ~ a`                               |
//! | `y_a`, `y_b`, `a ~ b` | YY_ADJ | `a b .. w` with `w ~ a`                      |
//! | `y_a`, `y_b`    | YY_EVEN / YY_ODD | `a`-`w`, `w ~ a`; parity of `b`'s position picks the case |
//!
//! Candidate base paths come from the exact solver (one per terminal
//! neighbor, plus the reversed cycle), then Pósa rotations of those, then a
//! capped depth-first enumeration. Only then is the exact solver run on
//! `mu(G)` itself. Odd-order bases always use that fallback.

mod patterns;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{mycielski, MycielskiLabeling, MycielskiVertex};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::hamiltonian::{hamiltonian_path_between, is_hamiltonian_connected, HcCertificate, HcOutcome, PairWitness};
use crate::path::{verify_path, VertexPath};

/// Distinct paths explored by Pósa rotations per request.
pub const ROTATION_CAP: usize = 256;
/// Complete base paths visited by the enumeration stage per request.
pub const ENUMERATION_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "XX")]
    Xx,
    #[serde(rename = "XY")]
    Xy,
    #[serde(rename = "XZ")]
    Xz,
    #[serde(rename = "X1Y1")]
    X1y1,
    #[serde(rename = "YZ")]
    Yz,
    #[serde(rename = "YY_ADJ")]
    YyAdj,
    #[serde(rename = "YY_EVEN")]
    YyEven,
    #[serde(rename = "YY_ODD")]
    YyOdd,
}

impl CaseId {
    pub const ALL: [CaseId; 8] =
        [CaseId::Xx, CaseId::Xy, CaseId::Xz, CaseId::X1y1, CaseId::Yz, CaseId::YyAdj, CaseId::YyEven, CaseId::YyOdd];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::Xx => "XX",
            CaseId::Xy => "XY",
            CaseId::Xz => "XZ",
            CaseId::X1y1 => "X1Y1",
            CaseId::Yz => "YZ",
            CaseId::YyAdj => "YY_ADJ",
            CaseId::YyEven => "YY_EVEN",
            CaseId::YyOdd => "YY_ODD",
        }
    }

    fn is_direct(self) -> bool {
        matches!(self, CaseId::Xx | CaseId::Xy | CaseId::Yz | CaseId::YyAdj)
    }

    fn is_yy_parity(self) -> bool {
        matches!(self, CaseId::YyEven | CaseId::YyOdd)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftMethod {
    Pattern,
    Fallback,
}

/// `G`, `mu(G)` and the labeling, built once and shared by every request.
#[derive(Clone, Debug)]
pub struct MycielskiContext {
    base: Graph,
    lifted: Graph,
    labeling: MycielskiLabeling,
}

impl MycielskiContext {
    pub fn new(g: &Graph) -> Result<Self> {
        let (lifted, labeling) = mycielski(g)?;
        Ok(MycielskiContext { base: g.clone(), lifted, labeling })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lifted(&self) -> &Graph {
        &self.lifted
    }

    pub fn labeling(&self) -> MycielskiLabeling {
        self.labeling
    }

    /// A request for the pair, with the case filled in by [`classify_pair`].
    pub fn request(&self, u: usize, v: usize) -> Result<LiftRequest<'_>> {
        let case = classify_pair(self, u, v)?.case;
        Ok(LiftRequest { ctx: self, endpoints: (u, v), case })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LiftRequest<'a> {
    pub ctx: &'a MycielskiContext,
    /// Endpoints in `mu(G)`, in the order the path should run.
    pub endpoints: (usize, usize),
    pub case: CaseId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftResult {
    /// The case whose pattern produced the path (after any YY re-dispatch),
    /// or the requested case for a fallback.
    pub case: CaseId,
    pub path: VertexPath,
    pub method: LiftMethod,
    /// Base path consumed by the pattern, starting at the canonical `a`.
    pub base_path: Option<VertexPath>,
}

/// A pair in canonical orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub case: CaseId,
    /// Base vertex playing index 1.
    pub a: usize,
    /// The other base vertex, if the second endpoint is not `z`.
    pub b: Option<usize>,
    /// The canonical orientation runs from the second requested endpoint.
    pub swapped: bool,
}

/// Maps a pair of `mu(G)` vertices to its case. Non-adjacent `y`-pairs are
/// reported as `YY_EVEN`; the base path decides between 6.1 and 6.2.
pub fn classify_pair(ctx: &MycielskiContext, u: usize, v: usize) -> Result<PairClass> {
    use MycielskiVertex::{X, Y, Z};
    if u == v {
        return Err(Error::invalid("lift endpoints must differ"));
    }
    let lab = ctx.labeling;
    let (cu, cv) = (lab.classify(u)?, lab.classify(v)?);
    let class = |case, a, b, swapped| PairClass { case, a, b, swapped };
    Ok(match (cu, cv) {
        (X(a), X(b)) => class(CaseId::Xx, a, Some(b), false),
        (X(a), Y(b)) if a == b => class(CaseId::X1y1, a, Some(b), false),
        (Y(b), X(a)) if a == b => class(CaseId::X1y1, a, Some(b), true),
        (X(a), Y(b)) => class(CaseId::Xy, a, Some(b), false),
        (Y(b), X(a)) => class(CaseId::Xy, a, Some(b), true),
        (X(a), Z) => class(CaseId::Xz, a, None, false),
        (Z, X(a)) => class(CaseId::Xz, a, None, true),
        (Y(a), Z) => class(CaseId::Yz, a, None, false),
        (Z, Y(a)) => class(CaseId::Yz, a, None, true),
        (Y(a), Y(b)) if ctx.base.has_edge(a, b) => class(CaseId::YyAdj, a, Some(b), false),
        (Y(a), Y(b)) => class(CaseId::YyEven, a, Some(b), false),
        (Z, Z) => unreachable!("distinct endpoints"),
    })
}

/// Positions `(r, s)`, `r < s`, of equal parity whose vertices are adjacent.
/// Scans `s` from the far end first, so a chord to the last vertex wins.
pub fn find_parity_chord(g: &Graph, base_path: &VertexPath) -> Result<Option<(usize, usize)>> {
    verify_path(g, base_path, true, None).map_err(|e| Error::invalid(format!("not a Hamiltonian path: {e}")))?;
    let p = base_path.vertices();
    Ok(parity_chord_ending_at(g, p, None))
}

fn parity_chord_ending_at(g: &Graph, p: &[usize], end: Option<usize>) -> Option<(usize, usize)> {
    let n = p.len();
    let ends: Vec<usize> = match end {
        Some(s) => vec![s],
        None => (0..n).rev().collect(),
    };
    for s in ends {
        for r in (s % 2..s).step_by(2) {
            if g.has_edge(p[r], p[s]) {
                return Some((r, s));
            }
        }
    }
    None
}

/// The formula path of `mu(P_n)`, where `P_n` is the path
/// `0-1-..-(n-1)`. Runs `x_1 .. x_n` for even `n` and `x_1 .. y_{n-2}` for odd.
pub fn prop7_path(n: usize) -> Result<VertexPath> {
    if n < 2 {
        return Err(Error::invalid(format!("the formula path needs n >= 2, got {n}")));
    }
    let base = crate::constructions::path(n)?;
    let (m, lab) = mycielski(&base)?;
    let p = VertexPath(patterns::prop7(n, &lab));
    let end = if n.is_multiple_of(2) { lab.x(n - 1) } else { lab.y(n - 3) };
    verify_path(&m, &p, true, Some((lab.x(0), end)))
        .map_err(|e| Error::invalid(format!("formula path failed for n = {n}: {e}")))?;
    Ok(p)
}

/// Direct cases: XX, XY, YZ, YY_ADJ.
pub fn lift_direct(req: &LiftRequest<'_>) -> Result<LiftResult> {
    if !req.case.is_direct() {
        return Err(Error::invalid(format!("{} is not a direct case", req.case)));
    }
    run(req)
}

/// Parity cases: XZ, X1Y1, YY_EVEN, YY_ODD.
pub fn lift_parity(req: &LiftRequest<'_>) -> Result<LiftResult> {
    if req.case.is_direct() {
        return Err(Error::invalid(format!("{} is not a parity case", req.case)));
    }
    run(req)
}

/// Classifies and lifts in one step.
pub fn lift_pair(ctx: &MycielskiContext, u: usize, v: usize) -> Result<LiftResult> {
    run(&ctx.request(u, v)?)
}

fn run(req: &LiftRequest<'_>) -> Result<LiftResult> {
    let (u, v) = req.endpoints;
    let class = classify_pair(req.ctx, u, v)?;
    let compatible = class.case == req.case || (class.case.is_yy_parity() && req.case.is_yy_parity());
    if !compatible {
        return Err(Error::invalid(format!("endpoints ({u}, {v}) form a {} pair, not {}", class.case, req.case)));
    }
    let (s, t) = if class.swapped { (v, u) } else { (u, v) };
    let lifter = Lifter { ctx: req.ctx, a: class.a, ends: (s, t) };
    let found = if req.ctx.base.order().is_multiple_of(2) { lifter.pattern(class) } else { None };
    let mut result = match found {
        Some(r) => r,
        None => {
            LiftResult { case: req.case, path: fallback(req.ctx, s, t)?, method: LiftMethod::Fallback, base_path: None }
        }
    };
    if class.swapped {
        result.path = result.path.reversed();
    }
    Ok(result)
}

fn fallback(ctx: &MycielskiContext, s: usize, t: usize) -> Result<VertexPath> {
    hamiltonian_path_between(&ctx.lifted, s, t)?
        .ok_or_else(|| Error::precondition(format!("mu(G) has no Hamiltonian path from {s} to {t}")))
}

struct Lifter<'a> {
    ctx: &'a MycielskiContext,
    a: usize,
    ends: (usize, usize),
}

impl Lifter<'_> {
    fn g(&self) -> &Graph {
        &self.ctx.base
    }

    fn accept(&self, case: CaseId, p: &[usize], seq: Vec<usize>) -> Option<LiftResult> {
        let path = VertexPath(seq);
        verify_path(&self.ctx.lifted, &path, true, Some(self.ends)).ok()?;
        Some(LiftResult { case, path, method: LiftMethod::Pattern, base_path: Some(VertexPath(p.to_vec())) })
    }

    fn dp(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        hamiltonian_path_between(self.g(), from, to).ok().flatten().map(|p| p.0)
    }

    fn pattern(&self, class: PairClass) -> Option<LiftResult> {
        let lab = &self.ctx.labeling;
        let a = self.a;
        match class.case {
            CaseId::Xx => {
                let p = self.dp(a, class.b?)?;
                self.accept(CaseId::Xx, &p, patterns::case1(&p, lab))
            }
            CaseId::Xy => {
                let p = self.dp(a, class.b?)?;
                self.accept(CaseId::Xy, &p, patterns::case2(&p, lab))
            }
            CaseId::Yz => self.search(&[a], |p| self.accept(CaseId::Yz, p, patterns::case5(p, lab))),
            CaseId::Xz | CaseId::X1y1 => {
                let case = class.case;
                self.search(&[a], |p| {
                    let n = p.len();
                    // An odd 0-based position is an even 1-based one.
                    let (r, _) = parity_chord_ending_at(self.g(), p, Some(n - 1))?;
                    let q = r + 1;
                    if q % 2 == 1 || q >= n {
                        return None;
                    }
                    let seq = if case == CaseId::Xz { patterns::case3(p, lab, q) } else { patterns::case4(p, lab, q) };
                    self.accept(case, p, seq)
                })
            }
            CaseId::YyAdj => {
                let b = class.b?;
                self.search(&[a, b], |p| self.accept(CaseId::YyAdj, p, patterns::case6(p, lab)))
                    .or_else(|| self.yy_parity(b))
            }
            CaseId::YyEven | CaseId::YyOdd => self.yy_parity(class.b?),
        }
    }

    fn yy_parity(&self, b: usize) -> Option<LiftResult> {
        let lab = &self.ctx.labeling;
        self.search(&[self.a], |p| {
            let n = p.len();
            let q = p.iter().position(|&v| v == b)? + 1;
            if q >= n {
                return None;
            }
            if q % 2 == 0 {
                self.accept(CaseId::YyEven, p, patterns::case6_1(p, lab, q))
            } else {
                self.accept(CaseId::YyOdd, p, patterns::case6_2(p, lab, q))
            }
        })
    }

    /// Runs `test` on Hamiltonian paths of `G` that begin with `prefix` and
    /// end at a neighbor of `prefix[0]`, stage by stage, until one succeeds.
    fn search<T>(&self, prefix: &[usize], mut test: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
        let g = self.g();
        let n = g.order();
        let a = prefix[0];
        if n < prefix.len() + 1 {
            return None;
        }
        let closes = |p: &[usize]| g.has_edge(a, p[n - 1]);
        let mut seeds: Vec<Vec<usize>> = Vec::new();

        for w in bits(g.neighbors(a)) {
            if prefix.contains(&w) {
                continue;
            }
            let Some(p) = self.dp_with_prefix(prefix, w) else { continue };
            if let Some(t) = test(&p) {
                return Some(t);
            }
            if prefix.len() == 1 {
                // The same cycle read the other way round from `a`.
                let mut rev = vec![a];
                rev.extend(p[1..].iter().rev());
                if let Some(t) = test(&rev) {
                    return Some(t);
                }
                seeds.push(rev);
            }
            seeds.push(p);
        }

        let mut seen: HashSet<Vec<usize>> = seeds.iter().cloned().collect();
        let mut queue: VecDeque<Vec<usize>> = seeds.into();
        while let Some(p) = queue.pop_front() {
            let end = p[n - 1];
            for i in prefix.len() - 1..n.saturating_sub(2) {
                if !g.has_edge(p[i], end) {
                    continue;
                }
                let mut r = p[..=i].to_vec();
                r.extend(p[i + 1..].iter().rev());
                if seen.len() >= ROTATION_CAP || !seen.insert(r.clone()) {
                    continue;
                }
                if closes(&r) {
                    if let Some(t) = test(&r) {
                        return Some(t);
                    }
                }
                queue.push_back(r);
            }
        }

        let mut found = None;
        let mut budget = ENUMERATION_CAP;
        enumerate_paths(g, prefix, &mut budget, &mut |p| {
            if closes(p) {
                found = test(p);
            }
            found.is_some()
        });
        found
    }

    fn dp_with_prefix(&self, prefix: &[usize], to: usize) -> Option<Vec<usize>> {
        match prefix {
            [a] => self.dp(*a, to),
            [a, b] => {
                // A `b`-`to` Hamiltonian path of `G - a`, with `a` put back in front.
                let (a, b) = (*a, *b);
                let h = self.g().remove_vertex(a).ok()?;
                let down = |v: usize| if v > a { v - 1 } else { v };
                let p = hamiltonian_path_between(&h, down(b), down(to)).ok().flatten()?;
                let mut out = vec![a];
                out.extend(p.0.into_iter().map(|v| if v >= a { v + 1 } else { v }));
                Some(out)
            }
            _ => None,
        }
    }
}

/// Depth-first enumeration of Hamiltonian paths extending `prefix`, in
/// lowest-next-vertex order. Stops when `visit` returns true or after
/// `budget` complete paths.
fn enumerate_paths(g: &Graph, prefix: &[usize], budget: &mut usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        g: &Graph,
        p: &mut Vec<usize>,
        used: u128,
        budget: &mut usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if p.len() == g.order() {
            *budget = budget.saturating_sub(1);
            return visit(p) || *budget == 0;
        }
        let last = *p.last().expect("nonempty prefix");
        for w in bits(g.neighbors(last) & !used) {
            p.push(w);
            if go(g, p, used | 1 << w, budget, visit) {
                return true;
            }
            p.pop();
        }
        false
    }
    let used = prefix.iter().fold(0u128, |m, &v| m | 1 << v);
    if prefix.windows(2).any(|w| !g.has_edge(w[0], w[1])) || *budget == 0 {
        return;
    }
    go(g, &mut prefix.to_vec(), used, budget, visit);
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodTally {
    pub pattern: usize,
    pub fallback: usize,
}

impl MethodTally {
    pub fn total(&self) -> usize {
        self.pattern + self.fallback
    }

    fn add(&mut self, m: LiftMethod) {
        match m {
            LiftMethod::Pattern => self.pattern += 1,
            LiftMethod::Fallback => self.fallback += 1,
        }
    }

    pub fn merge(&mut self, other: &MethodTally) {
        self.pattern += other.pattern;
        self.fallback += other.fallback;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLift {
    pub u: usize,
    pub v: usize,
    pub case: CaseId,
    pub method: LiftMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MycielskiHcCertificate {
    /// Witnesses for every pair of `mu(G)`.
    pub certificate: HcCertificate,
    /// How each pair was produced, in pair order.
    pub lifts: Vec<PairLift>,
    pub tally: MethodTally,
    pub by_case: BTreeMap<CaseId, MethodTally>,
}

/// Lifts every pair of `mu(g)`. Requires `g` Hamiltonian-connected, of
/// order at least 3.
pub fn mycielski_hc_certificate(g: &Graph) -> Result<MycielskiHcCertificate> {
    if g.order() < 3 {
        return Err(Error::precondition(format!(
            "the lift needs a base graph of order at least 3 other than K_2, got order {}",
            g.order()
        )));
    }
    let hc = is_hamiltonian_connected(g)?;
    if !hc.is_connected() {
        return Err(Error::NotHamiltonianConnected { pair: hc.bad_pair });
    }
    let ctx = MycielskiContext::new(g)?;
    let m = ctx.lifted.order();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let lifted: Vec<LiftResult> = pairs.par_iter().map(|&(u, v)| lift_pair(&ctx, u, v)).collect::<Result<_>>()?;

    let mut tally = MethodTally::default();
    let mut by_case: BTreeMap<CaseId, MethodTally> = BTreeMap::new();
    let mut lifts = Vec::with_capacity(pairs.len());
    let mut witnesses = Vec::with_capacity(pairs.len());
    for (&(u, v), r) in pairs.iter().zip(lifted) {
        tally.add(r.method);
        by_case.entry(r.case).or_default().add(r.method);
        lifts.push(PairLift { u, v, case: r.case, method: r.method });
        witnesses.push(PairWitness { u, v, path: r.path });
    }
    Ok(MycielskiHcCertificate {
        certificate: HcCertificate { outcome: HcOutcome::Connected, witnesses, bad_pair: None },
        lifts,
        tally,
        by_case,
    })
}
