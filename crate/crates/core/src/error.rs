use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("complement-distance identity requires diameter >= 3, got {0}")]
    DiameterTooSmall(String),

    #[error("malformed edge list: {0}")]
    Parse(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid clique size {0} (cliques need at least 2 vertices)")]
    CliqueTooSmall(usize),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("malformed clique attachment: {0}")]
    BadAttachment(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("graph is not a clique tree")]
    NotCliqueTree,

    #[error("invalid clique move: {0}")]
    InvalidMove(String),

    #[error("invalid edge deletion: {0}")]
    InvalidDeletion(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}
