use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole under specialization")]
    Pole,
    #[error("odd power of the half-variable in a result expected in q")]
    OddHalfPower,
    #[error("constant term must be {0}")]
    ConstantTerm(&'static str),
    #[error("truncation degree exceeded: need {need}, have {have}")]
    Truncation { need: usize, have: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("conjH violated: {0}")]
    NotPolynomial(String),
    #[error("outside fundamental set: delta = {0}")]
    OutsideFundamentalSet(i64),
    #[error("genericity violated: {0}")]
    Genericity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
