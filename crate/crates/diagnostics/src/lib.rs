//! Model validation for the inverse Gaussian regression stack.
//!
//! Three concerns live here: k-fold cross-validation with train/test
//! error metrics, Pearson correlation tables with significance tests,
//! and the numeric series behind the standard diagnostic plots
//! (residual-vs-fitted, scale-location, Cook's distance, normal Q-Q,
//! and the histogram-plus-fitted-density overlay). Everything emits
//! plain numbers; rendering is left to downstream consumers.

mod correlation;
mod cv;
mod error;
mod metrics;
mod plots;

pub use correlation::{correlation_report, CorrelationRow};
pub use cv::{k_fold_cv, CvConfig, CvReport, FoldMetrics};
pub use error::DiagError;
pub use metrics::{error_metrics, ErrorMetrics};
pub use plots::{
    density_overlay, diagnostic_bundle, qq_points, DensityCurve, DensityOverlay,
    DiagnosticBundle, CURVE_POINTS, DEFAULT_BINS,
};
