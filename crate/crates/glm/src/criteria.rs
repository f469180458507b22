use crate::error::GlmError;
use crate::irls::GlmFit;

/// Information criteria from a log-likelihood, a parameter count, and a
/// sample size: `aic = 2k - 2l`, `bic = k ln n - 2l`.
pub fn aic_bic(loglik: f64, k: usize, n: f64) -> Result<(f64, f64), GlmError> {
    if !(n > 0.0) || !n.is_finite() {
        return Err(GlmError::NonPositiveScalar {
            name: "n",
            value: n,
        });
    }
    let kf = k as f64;
    Ok((2.0 * kf - 2.0 * loglik, kf * n.ln() - 2.0 * loglik))
}

/// AIC and BIC of a fit. The parameter count is the number of
/// coefficients plus one for the estimated dispersion.
pub fn information_criteria(fit: &GlmFit) -> (f64, f64) {
    aic_bic(fit.loglik, fit.p + 1, fit.n as f64)
        .expect("fit sample size is positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn arranged_values_make_both_criteria_four() {
        // With zero log-likelihood, two parameters, and n = e^2 the
        // penalty terms coincide: aic = 4 and bic = 2 ln(e^2) = 4.
        let (aic, bic) = aic_bic(0.0, 2, std::f64::consts::E.powi(2)).unwrap();
        assert_relative_eq!(aic, 4.0, max_relative = 1e-14);
        assert_relative_eq!(bic, 4.0, max_relative = 1e-14);
    }

    #[test]
    fn bic_penalizes_harder_than_aic_for_large_samples() {
        let (aic, bic) = aic_bic(-10.0, 3, 1000.0).unwrap();
        assert!(bic > aic);
        assert_relative_eq!(aic, 26.0);
        assert_relative_eq!(bic, 3.0 * 1000.0_f64.ln() + 20.0);
    }

    #[test]
    fn sample_size_must_be_positive() {
        assert!(aic_bic(0.0, 2, 0.0).is_err());
        assert!(aic_bic(0.0, 2, f64::NAN).is_err());
    }
}
