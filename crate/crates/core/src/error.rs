use thiserror::Error;

use crate::exactnum::Rat;

/// Pairs of values are boxed to keep `Result` small.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational `{0}`: expected an integer or a/b (decimals are not accepted)")]
    ParseRational(String),

    #[error("expected a positive rational, got {0}")]
    NotPositive(Rat),

    #[error("expected a negative rational, got {0}")]
    NotNegative(Rat),

    #[error("({alpha}, {beta}) lies outside the supported quadrant: both dilations must be negative")]
    Quadrant { alpha: Box<Rat>, beta: Box<Rat> },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("integer parameter {0} does not fit in 64 bits")]
    Overflow(String),

    #[error("hypothesis 1 + u ≥ v violated for u = {u}, v = {v}")]
    DiagonalHypothesis { u: Box<Rat>, v: Box<Rat> },

    #[error("criteria disagree at ({alpha}, {beta}): {detail}")]
    Inconsistent {
        alpha: Box<Rat>,
        beta: Box<Rat>,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
