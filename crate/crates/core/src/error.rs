use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at {0}: argument is (numerically) a non-positive integer")]
    Pole(Complex64),

    #[error("series did not reach the requested tolerance within {cap} terms")]
    MaxTermsExceeded { cap: usize },

    #[error("{0} lies on the branch cut of the power function")]
    Branch(Complex64),

    #[error("series is not normalized: need a_0 = 0 and a_1 = 1")]
    NotNormalized,

    #[error("series does not vanish at the origin (a_0 = {0})")]
    NonvanishingAtZero(Complex64),

    #[error("{what}: {value} is outside the admissible domain")]
    OutOfDomain { what: &'static str, value: f64 },

    #[error("denominator vanishes at z = {0}")]
    ZeroDenominator(Complex64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid disk grid: {0}")]
    InvalidGrid(String),

    #[error("non-finite value encountered at z = {0}")]
    NonFinite(Complex64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
