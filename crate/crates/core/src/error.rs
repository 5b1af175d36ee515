use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("series diverges: balance parameter {0} is not positive")]
    Divergence(String),
    #[error("series does not terminate, so it has no exact sum")]
    NonTerminating,
    #[error("series did not reach tolerance within {terms} terms")]
    ConvergenceBudget { terms: usize },
    #[error("quadrature needs a positive decay rate, got {0}")]
    NoDecay(f64),
    #[error("quadrature did not converge: last difference {diff:e} exceeds {tol:e}")]
    ToleranceNotMet { diff: f64, tol: f64 },
    #[error("parameter set not admissible: {0}")]
    Admissibility(String),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("normalizing constant vanishes for m = {0}")]
    ZeroNormalizer(usize),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),
    #[error("polynomial vanishes at the normalization point for m = {0}")]
    ZeroEvaluation(usize),
    #[error("polynomial is not even")]
    NotSymmetric,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("spectral label cannot be resolved: {0}")]
    IndexResolution(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
