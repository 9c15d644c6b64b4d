use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{what}: order {order} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("{what}: node limit of {limit} expansions exhausted")]
    LimitExceeded { what: &'static str, limit: u64 },

    #[error("{0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Cap and node-limit failures, as opposed to bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::LimitExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
