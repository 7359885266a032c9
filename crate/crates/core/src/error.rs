use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("stretch factor must be positive")]
    InvalidStretch,

    #[error("coefficient index {index} outside 0..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// An exactness or sign check failed. Never caused by valid input.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("n = {n} exceeds the oracle feasibility limit {limit}")]
    ResourceLimit { n: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: expected index {expected}, found {found}")]
    Structure {
        line: usize,
        expected: String,
        found: String,
    },
}
