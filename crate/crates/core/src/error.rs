use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {u}) is a loop")]
    Loop { u: usize },
    #[error("edge index {index} is out of range for a graph with {m} edges")]
    InvalidEdgeRef { index: usize, m: usize },
    #[error("graph has parallel edges between {u} and {v}; a simple graph is required")]
    ParallelEdges { u: usize, v: usize },
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list: {message} (line {line})")]
    EdgeList { line: usize, message: String },
    #[error("brute-force enumeration refuses graphs with {m} edges (limit {limit})")]
    TooManyEdges { m: usize, limit: usize },
    #[error("polynomials have different edge counts ({left} vs {right})")]
    EdgeCountMismatch { left: usize, right: usize },
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown name `{name}`; known: {catalog}")]
    UnknownName { name: String, catalog: String },
    #[error("{0} is not a hamiltonian cycle of the graph")]
    InvalidCycle(String),
    #[error("candidate list is empty")]
    EmptyCandidates,
    #[error("candidates do not share (n, m): expected {expected:?}, found {found:?}")]
    MixedShapes {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("verification failed: {0}")]
    Verification(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
