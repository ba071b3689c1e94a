//! Exact Hamiltonicity, coloring and Mycielski-graph machinery with
//! checkable certificates, plus the exhaustive suites that exercise them.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hamiltonian;
pub mod iso;
pub mod lift;
pub mod path;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, DistanceMatrix, Graph, VertexMask};
pub use path::{verify_path, VertexPath};
