//! Vertex sequences used as Hamiltonian path and cycle certificates, and the
//! checker every construction and solver output goes through.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPath(pub Vec<usize>);

impl VertexPath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> VertexPath {
        VertexPath(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for VertexPath {
    fn from(v: Vec<usize>) -> Self {
        VertexPath(v)
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("-"))
    }
}

/// First problem found when checking a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PathViolation {
    Empty,
    VertexOutOfRange {
        position: usize,
        vertex: usize,
    },
    RepeatedVertex {
        position: usize,
        vertex: usize,
    },
    /// `seq[position]` and `seq[position + 1]` are not adjacent.
    MissingEdge {
        position: usize,
        from: usize,
        to: usize,
    },
    /// The closing edge of a cycle is missing.
    MissingClosingEdge {
        from: usize,
        to: usize,
    },
    WrongLength {
        expected: usize,
        found: usize,
    },
    WrongEndpoints {
        expected: (usize, usize),
        found: (usize, usize),
    },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::Empty => write!(f, "empty path"),
            PathViolation::VertexOutOfRange { position, vertex } => {
                write!(f, "vertex {vertex} at position {position} is out of range")
            }
            PathViolation::RepeatedVertex { position, vertex } => {
                write!(f, "vertex {vertex} repeated at position {position}")
            }
            PathViolation::MissingEdge { position, from, to } => {
                write!(f, "no edge {from}-{to} at position {position}")
            }
            PathViolation::MissingClosingEdge { from, to } => {
                write!(f, "no closing edge {from}-{to}")
            }
            PathViolation::WrongLength { expected, found } => {
                write!(f, "path has {found} vertices, expected {expected}")
            }
            PathViolation::WrongEndpoints { expected, found } => {
                write!(f, "path runs {}..{}, expected {}..{}", found.0, found.1, expected.0, expected.1)
            }
        }
    }
}

/// Accepts `path` iff its vertices are distinct and in range, consecutive
/// vertices are adjacent, and, when asked, it covers every vertex and runs
/// between `endpoints` (in that order).
pub fn verify_path(
    g: &Graph,
    path: &VertexPath,
    require_hamiltonian: bool,
    endpoints: Option<(usize, usize)>,
) -> Result<(), PathViolation> {
    let seq = path.vertices();
    if seq.is_empty() {
        return Err(PathViolation::Empty);
    }
    let mut seen = vec![false; g.order()];
    for (position, &vertex) in seq.iter().enumerate() {
        if vertex >= g.order() {
            return Err(PathViolation::VertexOutOfRange { position, vertex });
        }
        if std::mem::replace(&mut seen[vertex], true) {
            return Err(PathViolation::RepeatedVertex { position, vertex });
        }
    }
    for (position, w) in seq.windows(2).enumerate() {
        if !g.has_edge(w[0], w[1]) {
            return Err(PathViolation::MissingEdge { position, from: w[0], to: w[1] });
        }
    }
    if require_hamiltonian && seq.len() != g.order() {
        return Err(PathViolation::WrongLength { expected: g.order(), found: seq.len() });
    }
    if let Some(expected) = endpoints {
        let found = (seq[0], seq[seq.len() - 1]);
        if found != expected {
            return Err(PathViolation::WrongEndpoints { expected, found });
        }
    }
    Ok(())
}

/// Checks a Hamiltonian cycle given as its vertex order (the closing edge
/// from last back to first is implicit).
pub fn verify_cycle(g: &Graph, cycle: &VertexPath) -> Result<(), PathViolation> {
    verify_path(g, cycle, true, None)?;
    let (first, last) = (cycle.0[0], cycle.0[cycle.len() - 1]);
    if cycle.len() < 3 || !g.has_edge(last, first) {
        return Err(PathViolation::MissingClosingEdge { from: last, to: first });
    }
    Ok(())
}
