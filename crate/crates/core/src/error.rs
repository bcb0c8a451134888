use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty domain: a partial function must define at least one input")]
    EmptyDomain,

    #[error("dimension mismatch: expected n={expected}, got n={got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("search budget exceeded: n={n} is above the configured limit {limit}")]
    BudgetExceeded { n: usize, limit: usize },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("orthogonality violation: pair {x}/{y} has weighted inner product {value}, expected 0")]
    OrthogonalityViolation { x: String, y: String, value: String },

    #[error("measurement operator is not a projector: <s|P|s> = {0}")]
    NonProjector(f64),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
