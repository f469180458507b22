use thiserror::Error;

/// Failure modes of model fitting and the downstream diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GlmError {
    /// The fitting configuration is internally inconsistent.
    #[error("invalid fit configuration: {0}")]
    InvalidSpec(&'static str),

    /// A matrix or vector has the wrong number of rows or columns.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Fewer observations than coefficients; the model is not identifiable.
    #[error("need more observations than coefficients: n = {n}, p = {p}")]
    InsufficientObservations { n: usize, p: usize },

    /// The response must be strictly positive and finite.
    #[error("response value at index {index} is not a positive real: {value}")]
    NonPositiveResponse { index: usize, value: f64 },

    /// The design matrix contains a NaN or infinity.
    #[error("design matrix entry at ({row}, {col}) is not finite")]
    NonFiniteDesign { row: usize, col: usize },

    /// The design matrix (including any intercept column) has collinear
    /// columns, detected from the R factor of a column-pivoted QR.
    #[error("design matrix is rank deficient")]
    RankDeficientDesign,

    /// The iteration limit was reached before the stopping rule fired.
    /// Carries the deviance recorded after each accepted step.
    #[error("IRLS did not converge within the iteration limit")]
    NonConvergence { trace: Vec<f64> },

    /// Step-halving could not restore a strictly positive mean vector.
    #[error("fitted mean left the positive half-line at iteration {iteration}")]
    InvalidMeanDuringIteration { iteration: usize },

    /// The model interpolates the response exactly, so the dispersion
    /// estimate collapses to zero and no sampling theory applies.
    #[error("fit is exact: zero deviance leaves the dispersion undefined")]
    PerfectFit,

    /// Fitted means fed to a residual computation must be positive.
    #[error("fitted mean at index {index} is not a positive real")]
    NonPositiveFittedMean { index: usize },

    /// A leverage of one makes the deleted residual, and hence Cook's
    /// distance, undefined for that observation.
    #[error("observation {index} has leverage one")]
    LeverageOne { index: usize },

    /// Scalar input outside the required open domain.
    #[error("{name} must be a positive real, got {value}")]
    NonPositiveScalar { name: &'static str, value: f64 },
}
