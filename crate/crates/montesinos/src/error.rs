//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text; `position` is a 0-based byte offset.
    #[error("parse error in {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    /// A knot with fewer than three tangles.
    #[error("a Montesinos knot needs at least 3 tangles, got {0}")]
    Arity(usize),

    /// A request outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
