use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text; `line` is 1-based, 0 when the problem is not
    /// tied to a single line.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("instance has {n} vertices, brute force is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
