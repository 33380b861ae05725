use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{name} must be at least {min}, got {got}")]
    TooSmall { name: &'static str, min: u64, got: u64 },

    #[error("m = {m} does not divide n - 1 = {}", .n - 1)]
    NotDivisor { n: u64, m: u64 },

    #[error("exponent {value} is repeated modulo {modulus}")]
    DuplicateExponent { value: u64, modulus: u64 },

    #[error("twist {twist} is not coprime to {n}")]
    TwistNotCoprime { n: u64, twist: u64 },

    #[error("twist {twist} has multiplicative order {actual} modulo {n}, not {claimed}")]
    OrderMismatch { n: u64, twist: u64, claimed: u64, actual: u64 },

    #[error("{op} requires {requirement}")]
    Precondition { op: &'static str, requirement: String },

    #[error("frame columns are not unit-norm")]
    NotNormalized,

    #[error("frames were built from different parameters: {0}")]
    Mismatch(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid parameter: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn precondition(op: &'static str, requirement: impl Into<String>) -> Self {
        Error::Precondition { op, requirement: requirement.into() }
    }
}
