use thiserror::Error;

use crate::parser::ParseError;

/// Errors raised by the exact core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("rational function with zero denominator")]
    ZeroDenominator,

    #[error("increment must be nonzero")]
    ZeroIncrement,

    #[error("invalid number literal `{0}`")]
    InvalidNumber(String),

    #[error("{func}: {reason}")]
    Domain { func: &'static str, reason: String },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("cannot lower to a polynomial: {0}")]
    Lowering(String),

    /// A constructed certificate failed exact re-verification. Never expected.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
