use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("ground set mismatch: expected {expected} elements, got {actual}")]
    GroundSetMismatch { expected: usize, actual: usize },

    #[error("ground set of {n} elements exceeds the exhaustive limit of {limit}; use sampled mode")]
    TooLargeForExhaustive { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("loss of an empty exemplar set is undefined")]
    EmptyExemplarSet,

    #[error("block {block} sums to {sum}, which is not integral; cannot round losslessly")]
    NonIntegralBlock { block: usize, sum: f64 },

    #[error("gradient component {index} is negative ({value})")]
    NegativeGradient { index: usize, value: f64 },

    #[error("communication graph is disconnected; no covering walk exists")]
    Disconnected,

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
