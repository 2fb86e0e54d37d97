use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid proof context: {0}")]
    InvalidContext(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("search cancelled")]
    Cancelled,

    #[error("time limit exceeded")]
    TimeLimit,
}

impl Error {
    /// True for errors raised by a resource guard rather than by bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit(_) | Error::Cancelled | Error::TimeLimit
        )
    }
}
