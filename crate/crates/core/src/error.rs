use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Lengths or ranks that should agree do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Hecke-algebra oracle was asked for a degree above its cap.
    #[error("degree {r} exceeds the oracle cap {cap}")]
    Resource { r: usize, cap: usize },

    /// An internal consistency check failed; this is a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
