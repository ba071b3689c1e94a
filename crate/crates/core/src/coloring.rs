//! Exact chromatic number with certificates and k-criticality sweeps.
//!
//! The solver brackets `chi` between a maximum clique and a greedy DSATUR
//! coloring, then lowers the upper bound by running an exact
//! `k`-colorability search (saturation-order branching, new colors opened
//! only in increasing order) until a search fails. The last successful
//! coloring is returned; the failed search is the optimality proof.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::mycielski;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexMask};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    /// `colors[v]` for every vertex, canonicalized by first appearance.
    pub colors: Vec<usize>,
    /// Number of distinct colors.
    pub k: usize,
    /// Set when a `(k-1)`-coloring search has been exhausted.
    pub optimal: bool,
}

impl ColoringCertificate {
    /// Proper, uses exactly `k` colors `0..k`.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.order() {
            return false;
        }
        let used = self.colors.iter().fold(0u128, |acc, &c| acc | 1u128.checked_shl(c as u32).unwrap_or(0));
        let distinct = used.count_ones() as usize;
        distinct == self.k
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Relabels colors so they first appear in increasing order along vertex ids.
fn canonicalize(colors: &[usize]) -> Vec<usize> {
    let mut map = Vec::<(usize, usize)>::new();
    colors
        .iter()
        .map(|&c| match map.iter().find(|&&(old, _)| old == c) {
            Some(&(_, new)) => new,
            None => {
                let new = map.len();
                map.push((c, new));
                new
            }
        })
        .collect()
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: VertexMask, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            expand(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_mask(), &mut best);
    best
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    /// Vertex mask of each color class.
    classes: Vec<VertexMask>,
    colors: Vec<usize>,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> (u32, u128) {
        let adj = self.g.neighbors(v);
        let mut forbidden = 0u128;
        for (c, &class) in self.classes.iter().enumerate() {
            if adj & class != 0 {
                forbidden |= 1 << c;
            }
        }
        (forbidden.count_ones(), forbidden)
    }

    fn solve(&mut self, uncolored: VertexMask) -> bool {
        if uncolored == 0 {
            return true;
        }
        // DSATUR pick: most saturated, then most uncolored neighbors, then lowest id.
        let mut pick = None;
        let mut key = (0u32, 0u32);
        for v in bits(uncolored) {
            let (sat, _) = self.saturation(v);
            let deg = (self.g.neighbors(v) & uncolored).count_ones();
            if pick.is_none() || (sat, deg) > key {
                pick = Some(v);
                key = (sat, deg);
            }
        }
        let v = pick.expect("uncolored is nonempty");
        let (sat, forbidden) = self.saturation(v);
        if sat as usize >= self.k {
            return false;
        }
        let opened = self.classes.iter().filter(|&&c| c != 0).count();
        let limit = self.k.min(opened + 1);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colors[v] = c;
            if self.solve(uncolored & !(1 << v)) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        false
    }
}

/// Exact `k`-colorability; returns a coloring on success.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let k = k.min(g.order());
    let mut s = Search { g, k, classes: vec![0; k], colors: vec![0; g.order()] };
    s.solve(g.vertex_mask()).then_some(s.colors)
}

/// Greedy DSATUR coloring (an upper bound).
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut uncolored = g.vertex_mask();
    while uncolored != 0 {
        let forbidden = |v: usize| {
            bits(g.neighbors(v)).filter(|&w| colors[w] != usize::MAX).fold(0u128, |acc, w| acc | 1 << colors[w])
        };
        let v = bits(uncolored)
            .max_by_key(|&v| {
                (forbidden(v).count_ones(), (g.neighbors(v) & uncolored).count_ones(), std::cmp::Reverse(v))
            })
            .expect("nonempty");
        colors[v] = (!forbidden(v)).trailing_zeros() as usize;
        uncolored &= !(1 << v);
    }
    colors
}

pub fn chromatic_number(g: &Graph) -> ColoringCertificate {
    let n = g.order();
    if n == 0 {
        return ColoringCertificate { colors: Vec::new(), k: 0, optimal: true };
    }
    let lower = clique_number(g).max(1);
    let mut best = canonicalize(&dsatur_greedy(g));
    let mut k = best.iter().max().map_or(0, |&c| c + 1);
    while k > lower {
        match find_coloring(g, k - 1) {
            Some(c) => {
                best = canonicalize(&c);
                k = best.iter().max().map_or(0, |&c| c + 1);
            }
            None => break,
        }
    }
    ColoringCertificate { colors: best, k, optimal: true }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeChromatic {
    pub u: usize,
    pub v: usize,
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub chi: usize,
    /// `per_vertex[v] = chi(G - v)`.
    pub per_vertex: Vec<usize>,
    /// `chi(G - e)` for every edge, endpoints kept.
    pub per_edge: Vec<EdgeChromatic>,
    /// Every deletion dropped the chromatic number.
    pub critical: bool,
}

impl CriticalityReport {
    /// Deletion values outside `{chi - 1, chi}`; always empty for a simple graph.
    pub fn out_of_range(&self) -> Vec<String> {
        let ok = |c: usize| c + 1 == self.chi || c == self.chi;
        let mut bad: Vec<String> = self
            .per_vertex
            .iter()
            .enumerate()
            .filter(|(_, &c)| !ok(c))
            .map(|(v, c)| format!("chi(G-{v}) = {c}"))
            .collect();
        bad.extend(self.per_edge.iter().filter(|e| !ok(e.chi)).map(|e| format!("chi(G-{}{}) = {}", e.u, e.v, e.chi)));
        bad
    }
}

/// Optimal colorings behind a [`CriticalityReport`]: one for the graph and
/// one per deletion, in the report's order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionColorings {
    pub base: ColoringCertificate,
    pub per_vertex: Vec<ColoringCertificate>,
    pub per_edge: Vec<ColoringCertificate>,
}

/// Evaluates every vertex and edge deletion exactly. Rejects graphs
/// without edges.
pub fn criticality_report(g: &Graph) -> Result<CriticalityReport> {
    criticality_with_colorings(g).map(|(r, _)| r)
}

/// [`criticality_report`] plus the colorings that realize each value.
pub fn criticality_with_colorings(g: &Graph) -> Result<(CriticalityReport, DeletionColorings)> {
    if g.size() == 0 {
        return Err(Error::precondition("criticality needs a graph with at least one edge"));
    }
    let base = chromatic_number(g);
    let chi = base.k;
    let vertex_cols: Vec<ColoringCertificate> =
        (0..g.order()).into_par_iter().map(|v| chromatic_number(&g.remove_vertex(v).expect("in range"))).collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_cols: Vec<ColoringCertificate> =
        edges.par_iter().map(|&(u, v)| chromatic_number(&g.without_edge(u, v).expect("in range"))).collect();
    let per_vertex: Vec<usize> = vertex_cols.iter().map(|c| c.k).collect();
    let per_edge: Vec<EdgeChromatic> =
        edges.iter().zip(&edge_cols).map(|(&(u, v), c)| EdgeChromatic { u, v, chi: c.k }).collect();
    let critical = per_vertex.iter().all(|&c| c + 1 == chi) && per_edge.iter().all(|e| e.chi + 1 == chi);
    Ok((
        CriticalityReport { chi, per_vertex, per_edge, critical },
        DeletionColorings { base, per_vertex: vertex_cols, per_edge: edge_cols },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MycielskiCriticality {
    pub base: CriticalityReport,
    pub lifted: CriticalityReport,
    /// `mu(G)` is critical and `chi(mu(G)) = chi(G) + 1`.
    pub holds: bool,
}

/// For a critical `g`, evaluates whether `mu(g)` is critical with one more color.
pub fn check_mycielski_criticality(g: &Graph) -> Result<MycielskiCriticality> {
    let base = criticality_report(g)?;
    if !base.critical {
        return Err(Error::precondition(format!("input is not {}-critical", base.chi)));
    }
    let (m, _) = mycielski(g)?;
    let lifted = criticality_report(&m)?;
    let holds = lifted.critical && lifted.chi == base.chi + 1;
    Ok(MycielskiCriticality { base, lifted, holds })
}
