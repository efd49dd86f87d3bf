use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input supplied by the caller.
    #[error("input error: {0}")]
    Input(String),

    /// A graph or demand file could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An iterative method failed to reach its tolerance. `best` is the last estimate.
    #[error("numerical error: {msg} (best estimate {best})")]
    Numerical { msg: String, best: f64 },

    /// The requested instance is larger than the exhaustive routine supports.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An internal consistency check failed. This indicates a defect, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
