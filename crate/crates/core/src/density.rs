use crate::special::{log_norm_cdf, norm_cdf};
use crate::{IgError, IgParams};

impl IgParams {
    /// Density at `x > 0`.
    pub fn pdf(&self, x: f64) -> Result<f64, IgError> {
        Ok(self.log_pdf(x)?.exp())
    }

    /// Log density at `x > 0`, finite wherever the density is nonzero
    /// even when `pdf` itself would underflow.
    pub fn log_pdf(&self, x: f64) -> Result<f64, IgError> {
        check_support(x)?;
        Ok(self.log_pdf_raw(x))
    }

    pub(crate) fn log_pdf_raw(&self, x: f64) -> f64 {
        let mu = self.mu();
        let lambda = self.lambda();
        let d = x - mu;
        0.5 * (lambda / (2.0 * std::f64::consts::PI * x * x * x)).ln()
            - lambda * d * d / (2.0 * mu * mu * x)
    }

    /// Distribution function at `x > 0`.
    ///
    /// Uses the two-term closed form
    /// `Phi(s (x/mu - 1)) + exp(2 lambda/mu) Phi(-s (x/mu + 1))` with
    /// `s = sqrt(lambda/x)`. The second term is assembled in log space
    /// as `exp(2 lambda/mu + log Phi(...))`: the two factors overflow
    /// and underflow separately once `lambda/mu` exceeds a few hundred,
    /// while their product stays below one.
    pub fn cdf(&self, x: f64) -> Result<f64, IgError> {
        check_support(x)?;
        Ok(self.cdf_raw(x))
    }

    pub(crate) fn cdf_raw(&self, x: f64) -> f64 {
        let mu = self.mu();
        let lambda = self.lambda();
        let s = (lambda / x).sqrt();
        let head = norm_cdf(s * (x / mu - 1.0));
        let tail = (2.0 * lambda / mu + log_norm_cdf(-s * (x / mu + 1.0))).exp();
        (head + tail).clamp(0.0, 1.0)
    }
}

fn check_support(x: f64) -> Result<(), IgError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(IgError::OutsideSupport(x));
    }
    Ok(())
}
