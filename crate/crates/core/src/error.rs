use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("grid size mismatch: {left} vs {right}")]
    GridMismatch { left: usize, right: usize },

    #[error("grid size {0} too small (need at least 2 samples)")]
    GridTooSmall(usize),

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("operation requires real-valued samples")]
    ComplexInput,

    #[error("exponent p = {0} must be positive")]
    BadExponent(f64),

    #[error("{name} = {value} outside admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("boundary modulus must be strictly positive (sample {index} = {value})")]
    NonPositiveModulus { index: usize, value: f64 },

    #[error("input has zero norm")]
    ZeroNorm,

    #[error("exchange hypothesis violated at row {row}, columns ({j}, {k}): {reason}")]
    ExchangeHypothesis {
        row: usize,
        j: usize,
        k: usize,
        reason: String,
    },

    #[error("index out of bounds: {0}")]
    Index(String),

    #[error("root bracket has no sign change: {0}")]
    NoSignChange(String),

    #[error("negative kernel sample at index {0}")]
    NegativeKernel(usize),

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("usage: {0}")]
    Usage(String),
}
