use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("evaluation at a pole: R = {0} is a root of the denominator")]
    Pole(Rational),
    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("odd dimensions only (got n = {0})")]
    EvenDimension(u32),
    #[error("conjecture coefficients irrational in even dimensions (n = {0})")]
    IrrationalConjecture(u32),
    #[error("{what} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("boundary system is singular")]
    SingularSystem,
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("invalid metric space: {0}")]
    InvalidMetric(String),
    #[error("magnitude undefined or ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("grid too large: level {level} needs {points} points (cap {cap}); levels reached: {reached}")]
    GridTooLarge {
        level: u32,
        points: usize,
        cap: usize,
        reached: u32,
    },
    #[error("parse error: {0}")]
    Parse(String),
}
