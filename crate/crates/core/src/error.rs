use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A quantity is undefined for the given graph (e.g. a ratio over zero edges).
    #[error("undefined: {0}")]
    Undefined(String),

    #[error("oracle refused graph with {n} vertices (limit {limit})")]
    OracleLimit { n: usize, limit: usize },

    /// An internal consistency check failed; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
