use thiserror::Error;

/// Errors raised by distribution primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IgError {
    #[error("mean parameter must be positive and finite, got {0}")]
    InvalidMu(f64),
    #[error("shape parameter must be positive and finite, got {0}")]
    InvalidLambda(f64),
    #[error("natural parameter {name} must be negative and finite, got {value}")]
    InvalidNaturalParam { name: &'static str, value: f64 },
    #[error("density is only defined for x > 0, got {0}")]
    OutsideSupport(f64),
    #[error("probability must lie strictly inside (0, 1), got {0}")]
    InvalidProbability(f64),
    #[error("quantile search failed to converge for p = {p}")]
    QuantileNoConvergence { p: f64 },
}
