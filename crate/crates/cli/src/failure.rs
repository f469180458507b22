//! Mapping from library errors to exit codes and report error bodies.
//!
//! Exit code 2 means the input was unusable (missing files, malformed
//! tables, impossible configurations); exit code 3 means the input was
//! well formed but the computation failed on it numerically (rank
//! deficiency, non-convergence, degenerate samples). The distinction
//! lets callers retry code 3 with different settings while treating
//! code 2 as a caller bug.

use ig_cli::report::{nums, ErrorBody};
use ig_data::DataError;
use ig_diagnostics::DiagError;
use ig_fpt::FptError;
use ig_glm::GlmError;
use ig_inference::InferenceError;

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
    pub trace: Option<Vec<f64>>,
}

impl Failure {
    pub fn input(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            exit_code: EXIT_INPUT,
            trace: None,
        }
    }

    pub fn numerical(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            exit_code: EXIT_NUMERICAL,
            trace: None,
        }
    }

    pub fn body(&self) -> ErrorBody {
        ErrorBody {
            kind: self.kind,
            message: self.message.clone(),
            trace: self.trace.as_deref().map(nums),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::input("io", err.to_string())
    }
}

impl From<DataError> for Failure {
    fn from(err: DataError) -> Self {
        let kind = match err {
            DataError::FileNotFound { .. } => "file_not_found",
            DataError::Io { .. } => "io",
            DataError::HeaderMismatch { .. } => "header_mismatch",
            DataError::DuplicateColumn { .. } => "duplicate_column",
            DataError::MissingValue { .. } => "missing_value",
            DataError::ParseError { .. } => "parse_error",
            DataError::RaggedRow { .. } => "ragged_row",
            DataError::UnknownColumn { .. } => "unknown_column",
            DataError::ColumnLengthMismatch => "column_length_mismatch",
            DataError::InvalidThreshold { .. } => "invalid_threshold",
            DataError::SingularCovariance => "singular_covariance",
        };
        Failure::input(kind, err.to_string())
    }
}

impl From<GlmError> for Failure {
    fn from(err: GlmError) -> Self {
        let message = err.to_string();
        match err {
            GlmError::InvalidSpec(_) => Failure::input("invalid_spec", message),
            GlmError::DimensionMismatch { .. } => Failure::input("dimension_mismatch", message),
            GlmError::InsufficientObservations { .. } => {
                Failure::input("insufficient_observations", message)
            }
            GlmError::NonPositiveResponse { .. } => {
                Failure::input("non_positive_response", message)
            }
            GlmError::NonFiniteDesign { .. } => Failure::input("non_finite_design", message),
            GlmError::RankDeficientDesign => {
                Failure::numerical("rank_deficient_design", message)
            }
            GlmError::NonConvergence { trace } => Failure {
                kind: "non_convergence",
                message,
                exit_code: EXIT_NUMERICAL,
                trace: Some(trace),
            },
            GlmError::InvalidMeanDuringIteration { .. } => {
                Failure::numerical("invalid_mean_during_iteration", message)
            }
            GlmError::PerfectFit => Failure::numerical("perfect_fit", message),
            GlmError::NonPositiveFittedMean { .. } => {
                Failure::numerical("non_positive_fitted_mean", message)
            }
            GlmError::LeverageOne { .. } => Failure::numerical("leverage_one", message),
            GlmError::NonPositiveScalar { .. } => {
                Failure::numerical("non_positive_scalar", message)
            }
        }
    }
}

impl From<DiagError> for Failure {
    fn from(err: DiagError) -> Self {
        let message = err.to_string();
        match err {
            DiagError::InvalidFolds { .. } => Failure::input("invalid_folds", message),
            DiagError::LengthMismatch { .. } => Failure::input("length_mismatch", message),
            DiagError::EmptyInput => Failure::input("empty_input", message),
            DiagError::FoldTooSmall { .. } => Failure::input("fold_too_small", message),
            DiagError::ZeroVarianceTarget { .. } => {
                Failure::numerical("zero_variance_target", message)
            }
            DiagError::ConstantColumn { .. } => Failure::input("constant_column", message),
            DiagError::TooFewRows { .. } => Failure::input("too_few_rows", message),
            DiagError::Glm(inner) => inner.into(),
            DiagError::Data(inner) => inner.into(),
        }
    }
}

impl From<InferenceError> for Failure {
    fn from(err: InferenceError) -> Self {
        let message = err.to_string();
        match err {
            InferenceError::EmptySample => Failure::input("empty_sample", message),
            InferenceError::TooFewObservations { .. } => {
                Failure::input("too_few_observations", message)
            }
            InferenceError::NonPositiveValue { .. } => {
                Failure::input("non_positive_value", message)
            }
            InferenceError::NonFiniteValue { .. } => Failure::input("non_finite_value", message),
            InferenceError::DegenerateSample => Failure::numerical("degenerate_sample", message),
            InferenceError::InvalidCorrection { .. } => {
                Failure::input("invalid_correction", message)
            }
            InferenceError::InvalidLevel(_) => Failure::input("invalid_level", message),
            InferenceError::SingularCovariance => {
                Failure::numerical("singular_covariance", message)
            }
            InferenceError::InvalidReplicates => Failure::input("invalid_replicates", message),
            InferenceError::Core(_) => Failure::numerical("core", message),
        }
    }
}

impl From<FptError> for Failure {
    fn from(err: FptError) -> Self {
        let message = err.to_string();
        match err {
            FptError::InvalidParameter { .. } => Failure::input("invalid_parameter", message),
            FptError::InvalidStep { .. } => Failure::input("invalid_step", message),
            FptError::NoPaths => Failure::input("no_paths", message),
            FptError::NonPositiveDrift { .. } => Failure::input("non_positive_drift", message),
            FptError::CensoredSample { .. } => Failure::numerical("censored_sample", message),
        }
    }
}
