use thiserror::Error;

/// Errors raised by the library. Variants named `*NotExact` indicate a broken
/// invariant rather than bad input: the quotient in question is always integral.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid sequence id: {0}")]
    InvalidSequence(String),

    #[error("non-exact division in {context} at index {index}")]
    DivisionNotExact { context: &'static str, index: usize },

    #[error("sequence lists differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty input to {0}")]
    Empty(&'static str),

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("matrix is not square: {len} entries for order {order}")]
    NotSquare { order: usize, len: usize },

    #[error("matrix order {order} exceeds the cofactor-expansion cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },

    #[error("2-adic valuation of zero")]
    ZeroValuation,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is out of range (need p > 3)")]
    PrimeOutOfRange(u64),

    #[error("x_{index} is not divisible by {divisor}")]
    Divisibility { index: usize, divisor: u64 },

    #[error("{0} has no inverse modulo {1}")]
    NoInverse(String, String),

    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
