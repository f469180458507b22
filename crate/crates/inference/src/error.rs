use ig_core::IgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InferenceError {
    #[error("sample is empty")]
    EmptySample,
    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },
    #[error("observation {index} must be positive and finite, got {value}")]
    NonPositiveValue { index: usize, value: f64 },
    #[error("observation {index} must be finite, got {value}")]
    NonFiniteValue { index: usize, value: f64 },
    #[error("sample values are numerically identical; the shape estimate diverges")]
    DegenerateSample,
    #[error("bias correction c = {c} requires a sample larger than c, got n = {n}")]
    InvalidCorrection { c: usize, n: usize },
    #[error("confidence level must lie strictly inside (0, 1), got {0}")]
    InvalidLevel(f64),
    #[error("covariance matrix is singular or not positive definite")]
    SingularCovariance,
    #[error("bootstrap needs at least one replicate")]
    InvalidReplicates,
    #[error(transparent)]
    Core(#[from] IgError),
}
