use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("path set mixes parameters: expected {expected}, found {found}")]
    MixedParameters { expected: String, found: String },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    /// Raised by `from_schroder` when a diagonal starts on the boundary line.
    #[error("not a small Schröder path: {0}")]
    Domain(String),

    #[error("substitution does not yield a polynomial (nonzero remainder)")]
    NonPolynomialResult,

    #[error("{context} is not an integer: {value}")]
    IntegralityViolation { context: String, value: String },

    #[error("constant term must vanish: {0}")]
    ConstantTerm(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("fixed-point iteration did not stabilise after {0} iterations")]
    NonConvergence(usize),

    #[error("region code is infeasible")]
    Infeasible,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
