use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),
    /// The instance is larger than a configured cap.
    #[error("resource limit: {0}")]
    Resource(String),
    /// The solver ran out of its time budget before finishing.
    #[error("search exceeded its time budget of {0:?}")]
    Budget(std::time::Duration),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
    /// Graph spec or edge-list syntax error, with a 1-based position.
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
