use crate::mle::{fit_mle, log_likelihood, MleFit};
use crate::InferenceError;
use ig_core::special::{chi2_sf, norm_quantile};
use ig_core::IgParams;

/// Confidence interval with its lower endpoint clamped to the
/// parameter space boundary at 0 when the Wald interval crosses it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub truncated: bool,
}

/// Test statistic and its chi-square(2) p-value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestResult {
    pub statistic: f64,
    pub p_value: f64,
}

/// Wald intervals `estimate +/- z_{(1+level)/2} * se` for `(mu, lambda)`.
pub fn confidence_intervals(
    fit: &MleFit,
    level: f64,
) -> Result<(Interval, Interval), InferenceError> {
    if !(level > 0.0 && level < 1.0) {
        return Err(InferenceError::InvalidLevel(level));
    }
    let z = norm_quantile((1.0 + level) / 2.0);
    let make = |est: f64, se: f64| {
        let lo = est - z * se;
        Interval { lo: lo.max(0.0), hi: est + z * se, truncated: lo < 0.0 }
    };
    Ok((
        make(fit.params.mu(), fit.se_mu),
        make(fit.params.lambda(), fit.se_lambda),
    ))
}

/// Wald test of `H0: (mu, lambda) = null` using the fit's asymptotic
/// covariance: `W = d' cov^{-1} d`, chi-square(2) under the null.
pub fn wald_test(fit: &MleFit, null: &IgParams) -> Result<TestResult, InferenceError> {
    let d = [
        fit.params.mu() - null.mu(),
        fit.params.lambda() - null.lambda(),
    ];
    let c = &fit.cov;
    let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    if !(det > 0.0 && det.is_finite() && c[0][0] > 0.0) {
        return Err(InferenceError::SingularCovariance);
    }
    let statistic = ((c[1][1] * d[0] * d[0] - (c[0][1] + c[1][0]) * d[0] * d[1]
        + c[0][0] * d[1] * d[1])
        / det)
        .max(0.0);
    Ok(TestResult { statistic, p_value: chi2_sf(statistic, 2.0) })
}

/// Likelihood-ratio test of `H0: (mu, lambda) = null`:
/// `2 (l(theta_hat) - l(null))`, chi-square(2) under the null.
pub fn likelihood_ratio_test(
    sample: &[f64],
    null: &IgParams,
) -> Result<TestResult, InferenceError> {
    let fit = fit_mle(sample)?;
    let l0 = log_likelihood(sample, null)?;
    // The MLE maximizes the likelihood, so the difference is
    // nonnegative up to rounding; clamp the rounding.
    let statistic = (2.0 * (fit.loglik - l0)).max(0.0);
    Ok(TestResult { statistic, p_value: chi2_sf(statistic, 2.0) })
}
