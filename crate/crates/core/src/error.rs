use thiserror::Error;

/// Errors raised by the algebra layer and the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Operands do not live in the same ring or module (lengths, ranks).
    #[error("structural mismatch: {0}")]
    Structure(String),

    /// The operation is undefined for this input (zero vector, wrong component, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("exponent or degree overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),

    #[error("invalid grading: {0}")]
    Grading(String),

    #[error("invalid ordering: {0}")]
    Ordering(String),

    /// The computation would not be guaranteed to terminate.
    #[error("computation refused: {0}")]
    Refused(String),

    #[error("time budget exhausted")]
    Timeout,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
