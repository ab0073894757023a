//! Crate-wide error type.
//!
//! The variants separate the caller's failure modes: bad arguments, inputs
//! past the supported size, malformed graph6 text (always with a byte
//! offset), inputs outside a check's regime, and a witness-extraction run
//! that exhausted its search space.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The call itself is malformed: out-of-range vertex, invalid `t`, a
    /// sequence that is not a path/cycle of the host graph, and so on.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input is structurally sound but larger than the exact searches
    /// support.
    #[error("capacity exceeded: {what} is {requested}, limit {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// Malformed graph6 text. `offset` is the byte position within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// The graph does not satisfy the preconditions of the requested check;
    /// the check's answer would carry no information.
    #[error("out of regime: {0}")]
    Regime(String),

    /// Expected structure is missing (e.g. no off-cycle vertices where the
    /// construction needs two).
    #[error("structure error: {0}")]
    Structure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn regime(msg: impl Into<String>) -> Self {
        Error::Regime(msg.into())
    }
}
