use thiserror::Error;

/// Errors raised by the exact arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("{c} is not a unit modulo {p}")]
    InvalidUnit { p: u32, c: i64 },
    #[error("elements live over different primes ({left} vs {right})")]
    PrimeMismatch { left: u32, right: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("expected a {expected} model, found {found}")]
    WrongSeries { expected: String, found: String },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
