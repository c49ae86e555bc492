//! Error type shared by every module of the kernel.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of a negative quantity")]
    NegativeSquareRoot,

    #[error("{0} is not the square of a rational; use the float backend for this value")]
    NotARationalSquare(String),

    #[error("word factor {0} does not have norm 1")]
    NonUnitFactor(String),

    #[error("word is not unital: the right companion sends 1 to {0}")]
    UnnormalizedWord(String),

    #[error("point ({0}, {1}) is not inside the unit ball")]
    NotInBall(String, String),

    #[error("point ({0}, {1}) is not on the unit sphere")]
    NotOnSphere(String, String),

    #[error("octonion {0} is not purely imaginary")]
    NotImaginary(String),

    #[error("coefficient {index} must be zero at Cayley-Dickson level {level:?}")]
    LevelOverflow {
        level: crate::algebra::AlgebraLevel,
        index: usize,
    },

    #[error("input is not quaternionic (level above Quaternion)")]
    NotQuaternionic,

    #[error("first coordinate equals 1: the translation action is undefined there")]
    DegenerateBoundaryPoint,

    #[error("denominator {0} has zero norm")]
    VanishingDenominator(String),

    #[error("scale factor {0} must be positive")]
    NonPositiveScale(String),

    #[error("the two points coincide; no unique line through them")]
    EqualPoints,

    #[error("the two lines coincide; no unique intersection point")]
    EqualLines,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
