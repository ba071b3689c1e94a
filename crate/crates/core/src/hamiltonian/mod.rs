//! Exact Hamiltonicity with certificates, the classical degree conditions,
//! and the Bondy–Chvátal closure.

mod conditions;
mod dp;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use conditions::{chvatal_hamiltonian_condition, closure, closure_with_order, ore_hc_condition, path_condition};
pub use dp::MAX_DP_ORDER;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMask};
use crate::path::{verify_cycle, verify_path, VertexPath};
use dp::{check_order, EndTable};

/// A `u`-`v` Hamiltonian path, or `None` when none exists.
///
/// Among all such paths the one returned is the lexicographically least
/// when read from `u`.
pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<VertexPath>> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, order: n });
        }
    }
    if u == v {
        return Err(Error::invalid("Hamiltonian path endpoints must differ"));
    }
    check_order(g)?;
    let path = EndTable::build(g, v).walk_to_anchor(u).map(VertexPath);
    if let Some(p) = &path {
        debug_assert_eq!(verify_path(g, p, true, Some((u, v))), Ok(()));
    }
    Ok(path)
}

/// Some Hamiltonian path, if the graph has one (any endpoints).
pub fn hamiltonian_path(g: &Graph) -> Result<Option<VertexPath>> {
    check_order(g)?;
    match g.order() {
        0 => Ok(None),
        1 => Ok(Some(VertexPath(vec![0]))),
        n => {
            for v in 0..n {
                let t = EndTable::build(g, v);
                let ends = t.hamiltonian_ends() & !(1 << v);
                if ends != 0 {
                    return Ok(t.walk_to_anchor(ends.trailing_zeros() as usize).map(VertexPath));
                }
            }
            Ok(None)
        }
    }
}

/// A Hamiltonian cycle as a vertex order starting at `0`; the closing edge
/// back to `0` is implicit.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<VertexPath>> {
    if g.order() < 3 {
        return Err(Error::invalid(format!("Hamiltonian cycles need at least 3 vertices, got {}", g.order())));
    }
    check_order(g)?;
    let t = EndTable::build(g, 0);
    let closing = t.hamiltonian_ends() & g.neighbors(0) as u32;
    if closing == 0 {
        return Ok(None);
    }
    let mut seq = t.walk_to_anchor(closing.trailing_zeros() as usize).expect("end set promised a path");
    seq.reverse();
    let cycle = VertexPath(seq);
    debug_assert_eq!(verify_cycle(g, &cycle), Ok(()));
    Ok(Some(cycle))
}

/// For each vertex `u`, the set of `v != u` joined to `u` by a Hamiltonian path.
pub fn hamiltonian_endpoint_sets(g: &Graph) -> Result<Vec<VertexMask>> {
    check_order(g)?;
    if g.order() < 2 {
        return Ok(vec![0; g.order()]);
    }
    Ok((0..g.order())
        .into_par_iter()
        .map(|a| (EndTable::build(g, a).hamiltonian_ends() & !(1 << a)) as VertexMask)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HcOutcome {
    Connected,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    pub path: VertexPath,
}

/// Outcome of an all-pairs Hamiltonian path sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcCertificate {
    pub outcome: HcOutcome,
    /// One witness per pair `u < v`, ordered by pair, when connected.
    pub witnesses: Vec<PairWitness>,
    /// Lexicographically first pair without a Hamiltonian path. `None` for a
    /// counterexample only when the graph has fewer than two vertices.
    pub bad_pair: Option<(usize, usize)>,
}

impl HcCertificate {
    pub fn is_connected(&self) -> bool {
        self.outcome == HcOutcome::Connected
    }

    /// Re-checks every stored witness against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        match self.outcome {
            HcOutcome::Connected => {
                let n = g.order();
                if self.witnesses.len() != n * n.saturating_sub(1) / 2 {
                    return Err(format!("{} witnesses for order {n}", self.witnesses.len()));
                }
                for w in &self.witnesses {
                    verify_path(g, &w.path, true, Some((w.u, w.v)))
                        .map_err(|e| format!("pair ({}, {}): {e}", w.u, w.v))?;
                }
                Ok(())
            }
            HcOutcome::Counterexample => Ok(()),
        }
    }
}

/// Decides Hamiltonian-connectedness, producing a witness for every pair.
///
/// One table per anchor `v` serves every pair `(u, v)` with `u < v`, and the
/// witness for that pair is the lowest-next-vertex walk from `u`. Anchors are
/// processed in parallel; output order does not depend on scheduling.
/// `K_2` counts as Hamiltonian-connected; graphs of order below 2 do not.
pub fn is_hamiltonian_connected(g: &Graph) -> Result<HcCertificate> {
    check_order(g)?;
    let n = g.order();
    if n < 2 {
        return Ok(HcCertificate { outcome: HcOutcome::Counterexample, witnesses: Vec::new(), bad_pair: None });
    }
    // Per anchor v: witnesses for u < v, and the first u that has none.
    type Row = (Vec<PairWitness>, Option<(usize, usize)>);
    let per_anchor: Vec<Row> = (1..n)
        .into_par_iter()
        .map(|v| {
            let t = EndTable::build(g, v);
            let mut found = Vec::with_capacity(v);
            for u in 0..v {
                match t.walk_to_anchor(u) {
                    Some(seq) => found.push(PairWitness { u, v, path: VertexPath(seq) }),
                    None => return (found, Some((u, v))),
                }
            }
            (found, None)
        })
        .collect();

    // Failing pairs are reported in (u, v) lexicographic order.
    let bad_pair = per_anchor.iter().filter_map(|(_, bad)| *bad).min();
    if bad_pair.is_some() {
        return Ok(HcCertificate { outcome: HcOutcome::Counterexample, witnesses: Vec::new(), bad_pair });
    }
    let mut witnesses: Vec<PairWitness> = per_anchor.into_iter().flat_map(|(w, _)| w).collect();
    witnesses.sort_by_key(|w| (w.u, w.v));
    Ok(HcCertificate { outcome: HcOutcome::Connected, witnesses, bad_pair: None })
}
