//! Estimation and testing for i.i.d. inverse Gaussian samples.
//!
//! Provides the closed-form maximum likelihood estimator with its
//! asymptotic covariance, the exactly unbiased shape correction, the
//! Fisher information, Wald and likelihood-ratio tests against a fixed
//! null, Kolmogorov-Smirnov goodness of fit (asymptotic and parametric
//! bootstrap), and a three-way model comparison against normal and
//! exponential alternatives.

mod compare;
mod error;
mod fisher;
mod hypothesis;
mod ks;
mod mle;

pub use compare::{
    compare_distributions, compare_distributions_with, ks_test_bootstrap, ComparisonRow,
    DistributionComparison, FitConvention, FittedDistribution, ModelKind,
};
pub use error::InferenceError;
pub use fisher::fisher_information;
pub use hypothesis::{
    confidence_intervals, likelihood_ratio_test, wald_test, Interval, TestResult,
};
pub use ks::{kolmogorov_sf, ks_statistic, ks_test, KsMethod, KsResult};
pub use mle::{bias_corrected_lambda, fit_mle, log_likelihood, MleFit, DEFAULT_BIAS_CORRECTION};
