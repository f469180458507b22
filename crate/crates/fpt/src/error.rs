use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FptError {
    #[error("invalid {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("step {dt} must be positive and smaller than the horizon {max_time}")]
    InvalidStep { dt: f64, max_time: f64 },
    #[error("at least one path is required")]
    NoPaths,
    #[error("hitting times have a proper law only under positive drift, got nu = {nu}")]
    NonPositiveDrift { nu: f64 },
    #[error("{censored} paths never hit; extend the horizon for an unbiased comparison")]
    CensoredSample { censored: usize },
}
