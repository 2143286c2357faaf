use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed argument: bad factor, out-of-range vertex, infeasible sequence.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request is well formed but outside what a method supports (size caps, n ranges).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An operation was called on a value that violates its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// No feasible part sequence exists for the requested bounds.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Cache(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Cache(e.to_string())
    }
}
