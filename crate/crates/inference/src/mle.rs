use crate::InferenceError;
use ig_core::IgParams;

/// Correction that makes the shape estimator exactly mean-unbiased:
/// `lambda * Σ(1/x_i - 1/x̄)` is chi-square with `n - 1` degrees of
/// freedom, and `E[1/chi2_k] = 1/(k - 2)`, so dividing `n - 3` by the
/// sum has expectation exactly `lambda`.
pub const DEFAULT_BIAS_CORRECTION: usize = 3;

/// Maximum likelihood fit of an inverse Gaussian sample.
#[derive(Debug, Clone, PartialEq)]
pub struct MleFit {
    pub params: IgParams,
    pub n: usize,
    pub loglik: f64,
    /// Asymptotic covariance of `(mu_hat, lambda_hat)`: the inverse
    /// Fisher information at the estimate divided by `n`.
    pub cov: [[f64; 2]; 2],
    pub se_mu: f64,
    pub se_lambda: f64,
}

pub(crate) fn validate_sample(sample: &[f64], needed: usize) -> Result<(), InferenceError> {
    if sample.is_empty() {
        return Err(InferenceError::EmptySample);
    }
    if sample.len() < needed {
        return Err(InferenceError::TooFewObservations { needed, got: sample.len() });
    }
    for (index, &value) in sample.iter().enumerate() {
        if !(value.is_finite() && value > 0.0) {
            return Err(InferenceError::NonPositiveValue { index, value });
        }
    }
    Ok(())
}

/// `x̄` and `Σ(1/x_i - 1/x̄)` with the scale-aware degeneracy check:
/// a spread below `1e-12 * n / x̄` means the sample is numerically
/// constant and the shape estimate would diverge.
fn mean_and_reciprocal_spread(sample: &[f64]) -> Result<(f64, f64), InferenceError> {
    let n = sample.len() as f64;
    let mean = sample.iter().sum::<f64>() / n;
    let spread: f64 = sample.iter().map(|x| 1.0 / x - 1.0 / mean).sum();
    if !(spread > 1e-12 * n / mean) {
        return Err(InferenceError::DegenerateSample);
    }
    Ok((mean, spread))
}

/// Log-likelihood of `params` on the sample.
pub fn log_likelihood(sample: &[f64], params: &IgParams) -> Result<f64, InferenceError> {
    validate_sample(sample, 1)?;
    let mut total = 0.0;
    for &x in sample {
        total += params.log_pdf(x)?;
    }
    Ok(total)
}

/// Closed-form maximum likelihood estimation:
/// `mu_hat = x̄`, `lambda_hat = n / Σ(1/x_i - 1/x̄)`.
pub fn fit_mle(sample: &[f64]) -> Result<MleFit, InferenceError> {
    validate_sample(sample, 2)?;
    let n = sample.len() as f64;
    let (mean, spread) = mean_and_reciprocal_spread(sample)?;
    let lambda = n / spread;
    let params = IgParams::new(mean, lambda)?;
    let loglik = log_likelihood(sample, &params)?;
    let cov = [
        [mean * mean * mean / (lambda * n), 0.0],
        [0.0, 2.0 * lambda * lambda / n],
    ];
    Ok(MleFit {
        params,
        n: sample.len(),
        loglik,
        cov,
        se_mu: cov[0][0].sqrt(),
        se_lambda: cov[1][1].sqrt(),
    })
}

/// Shape estimate with `n` replaced by `n - c` in the numerator.
///
/// `c = 0` reduces to the MLE; `c = 3` removes its upward bias exactly.
pub fn bias_corrected_lambda(sample: &[f64], c: usize) -> Result<f64, InferenceError> {
    validate_sample(sample, 2)?;
    if c >= sample.len() {
        return Err(InferenceError::InvalidCorrection { c, n: sample.len() });
    }
    let (_, spread) = mean_and_reciprocal_spread(sample)?;
    Ok((sample.len() - c) as f64 / spread)
}
