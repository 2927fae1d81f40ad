use thiserror::Error;

/// Errors produced by graph construction, the oracles, enumeration and graph6 I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size limit was exceeded (graph order, catalog order, oracle ceiling).
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Input violates an operation's precondition.
    #[error("invalid input: {0}")]
    Validation(String),
    /// Malformed graph6 or edge-list text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// An internal self-check failed. Indicates a bug, not bad input.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
