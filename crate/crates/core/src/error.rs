use thiserror::Error;

use crate::algebra::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("not a Lie element: residual term {word} cannot be eliminated")]
    NotALieElement { word: String },

    #[error("unknown generator g{index} (alphabet has {gens} generators)")]
    UnknownGenerator { index: usize, gens: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("input is not in the variety {}", .0.variety)]
    NotInVariety(Box<VerificationReport>),

    #[error("malformed algebra file: {0}")]
    Format(String),

    /// A chain-complex identity failed; this signals a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}
