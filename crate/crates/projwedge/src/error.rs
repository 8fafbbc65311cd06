use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative input where a nonnegative rational is required")]
    NegativeInput,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("empty point list")]
    EmptyInput,
    #[error("coordinate pair must satisfy 1 <= i < j <= 4")]
    BadIndexPair,
    #[error("wedge vector has a negative entry")]
    NegativeEntry,
    #[error("wedge vector has a non-integer entry")]
    NonIntegerInput,
    #[error("operation does not apply to this input: {0}")]
    NotApplicable(&'static str),
    #[error("target is outside the T2 region")]
    OutsideT2,
    #[error("target is not on the boundary of the T2 region")]
    NotOnBoundary,
    #[error("target has a zero entry")]
    NotAllPositive,
    #[error("target is not in the interior of the T2 region")]
    NotInterior,
    #[error("tolerance must be positive")]
    ToleranceNotPositive,
    #[error("parameter s must satisfy s >= 1")]
    SLessThanOne,
    #[error("ill-formed class: {0}")]
    IllFormed(&'static str),
    #[error("dimension mismatch between dims vector and matrix")]
    DimensionMismatch,
    #[error("arguments out of range: {0}")]
    RangeError(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failure: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
