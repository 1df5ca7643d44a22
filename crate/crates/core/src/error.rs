use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph on {n} vertices exceeds the {max}-vertex bitset capacity")]
    TooManyVertices { n: usize, max: usize },

    #[error("{operation} is capped at {cap} vertices, got {n}")]
    Capacity {
        operation: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {message}")]
    Invariant {
        message: String,
        certificate: String,
    },
}

impl Error {
    pub(crate) fn capacity(operation: &'static str, n: usize, cap: usize) -> Self {
        Error::Capacity { operation, n, cap }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::TooManyVertices { .. })
    }
}
