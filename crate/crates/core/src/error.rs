use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("base graph is not Hamiltonian-connected{}", match .pair {
        Some((u, v)) => format!(": no Hamiltonian path joins {u} and {v}"),
        None => " (fewer than two vertices)".to_string(),
    })]
    NotHamiltonianConnected { pair: Option<(usize, usize)> },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
