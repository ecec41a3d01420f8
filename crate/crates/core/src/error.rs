//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edge joins a vertex to itself.
    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: u32, v: u32 },

    /// The same unordered vertex pair appears more than once in the edge list.
    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: u32, v: u32 },

    /// An edge references a vertex id outside `0..vertex_count`.
    #[error("edge ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange { u: u32, v: u32, vertex_count: usize },

    /// A vertex has no incident edge (minimum degree 1 is required).
    #[error("vertex {v} has no incident edge")]
    IsolatedVertex { v: u32 },

    /// The graph is not connected.
    #[error("graph is not connected")]
    Disconnected,

    /// A parameter is outside the domain of the requested operation.
    #[error("{0}")]
    Domain(String),

    /// A census contains a degree pair the fast evaluation path does not cover.
    #[error("census contains unsupported degree pair ({i}, {j}); only (2,2), (2,3) and (3,3) are supported")]
    UnsupportedCensus { i: u32, j: u32 },

    /// Exhaustive chain enumeration was requested above the configured cap.
    #[error("enumerating all 3^(n-2) chains for n = {n} exceeds the cap n ≤ {cap}; raise the cap to proceed")]
    EnumerationCapExceeded { n: u64, cap: u64 },

    /// A chain spec string could not be parsed.
    #[error("malformed chain spec {input:?}: {reason}")]
    ChainSpecParse { input: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
