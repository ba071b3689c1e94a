//! Graph builders: Mycielski graphs, the iterated family `M_k`, and the
//! standard small families used throughout the test suites.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex naming contract for `mu(G)` when `G` has order `base_n`:
///
/// * `x(i) = i` for `i in 0..base_n` (the copy of `G`),
/// * `y(i) = base_n + i` (the shadow of `x(i)`),
/// * `z = 2 * base_n` (adjacent to every shadow).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MycielskiLabeling {
    pub base_n: usize,
}

/// Which part of `mu(G)` a vertex belongs to, with its base index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MycielskiVertex {
    X(usize),
    Y(usize),
    Z,
}

impl MycielskiLabeling {
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i < self.base_n);
        i
    }

    pub fn y(&self, i: usize) -> usize {
        debug_assert!(i < self.base_n);
        self.base_n + i
    }

    pub fn z(&self) -> usize {
        2 * self.base_n
    }

    pub fn order(&self) -> usize {
        2 * self.base_n + 1
    }

    pub fn classify(&self, v: usize) -> Result<MycielskiVertex> {
        let n = self.base_n;
        match v {
            _ if v < n => Ok(MycielskiVertex::X(v)),
            _ if v < 2 * n => Ok(MycielskiVertex::Y(v - n)),
            _ if v == 2 * n => Ok(MycielskiVertex::Z),
            _ => Err(Error::VertexOutOfRange { vertex: v, order: self.order() }),
        }
    }
}

/// The Mycielski graph `mu(g)`: edges `x_i x_j` and `x_i y_j`, `x_j y_i` for
/// every edge `ij` of `g`, plus `z y_i` for every `i`.
pub fn mycielski(g: &Graph) -> Result<(Graph, MycielskiLabeling)> {
    let lab = MycielskiLabeling { base_n: g.order() };
    let mut m = Graph::empty(lab.order())?;
    for (i, j) in g.edges() {
        m.add_edge(lab.x(i), lab.x(j))?;
        m.add_edge(lab.x(i), lab.y(j))?;
        m.add_edge(lab.x(j), lab.y(i))?;
    }
    for i in 0..g.order() {
        m.add_edge(lab.z(), lab.y(i))?;
    }
    Ok((m, lab))
}

/// `M_2 = K_2`, `M_{j+1} = mu(M_j)`. `M_7` (95 vertices) is the largest that
/// fits in a [`Graph`].
pub fn iterated_mycielski(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::invalid(format!("iterated Mycielski index must be at least 2, got {k}")));
    }
    let mut g = complete(2)?;
    for _ in 2..k {
        g = mycielski(&g)?.0;
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
}

impl std::str::FromStr for StandardKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(StandardKind::Path),
            "cycle" => Ok(StandardKind::Cycle),
            "complete" => Ok(StandardKind::Complete),
            other => Err(Error::invalid(format!("unknown graph family '{other}'"))),
        }
    }
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph> {
    match kind {
        StandardKind::Path => path(n),
        StandardKind::Cycle => cycle(n),
        StandardKind::Complete => complete(n),
    }
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    Ok(Graph::empty(n)?.complement())
}

/// `g` joined with one extra vertex (id `n`) adjacent to everything.
pub fn join_universal(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut h = Graph::empty(n + 1)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    for v in 0..n {
        h.add_edge(v, n)?;
    }
    Ok(h)
}

/// Wheel: hub `0` joined to a rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Result<Graph> {
    let c = cycle(rim)?;
    let mut h = Graph::empty(rim + 1)?;
    for (u, v) in c.edges() {
        h.add_edge(u + 1, v + 1)?;
    }
    for v in 1..=rim {
        h.add_edge(0, v)?;
    }
    Ok(h)
}

/// The Grötzsch graph, built as `mu(C_5)`.
pub fn grotzsch() -> Graph {
    mycielski(&cycle(5).expect("C5")).expect("order 11").0
}
