use ig_data::DataError;
use ig_glm::GlmError;
use thiserror::Error;

/// Errors from cross-validation, correlation analysis, and plot-data
/// assembly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiagError {
    #[error("fold count {folds} must lie in [2, {n}]")]
    InvalidFolds { folds: usize, n: usize },
    #[error("input lengths differ: {expected} vs {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("inputs must be nonempty")]
    EmptyInput,
    #[error("training part of fold {fold} has {n} rows for {p} coefficients")]
    FoldTooSmall { fold: usize, n: usize, p: usize },
    #[error("r-squared is undefined when every target value is {value}")]
    ZeroVarianceTarget { value: f64 },
    #[error("column {name} is constant")]
    ConstantColumn { name: String },
    #[error("correlation needs at least 3 rows, got {n}")]
    TooFewRows { n: usize },
    #[error(transparent)]
    Glm(#[from] GlmError),
    #[error(transparent)]
    Data(#[from] DataError),
}
