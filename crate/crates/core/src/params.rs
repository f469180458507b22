use crate::IgError;

/// Validated parameter pair of an inverse Gaussian distribution:
/// mean `mu > 0` and shape `lambda > 0`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IgParams {
    mu: f64,
    lambda: f64,
}

impl IgParams {
    pub fn new(mu: f64, lambda: f64) -> Result<Self, IgError> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(IgError::InvalidMu(mu));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(IgError::InvalidLambda(lambda));
        }
        Ok(Self { mu, lambda })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mean(&self) -> f64 {
        self.mu
    }

    /// Variance `mu^3 / lambda`.
    pub fn variance(&self) -> f64 {
        self.mu * self.mu * self.mu / self.lambda
    }

    /// `(mean, variance)` in one call.
    pub fn moments(&self) -> (f64, f64) {
        (self.mean(), self.variance())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_positive_finite_parameters() {
        let p = IgParams::new(2.0, 4.0).unwrap();
        assert_eq!(p.mu(), 2.0);
        assert_eq!(p.lambda(), 4.0);
        assert_eq!(p.moments(), (2.0, 2.0));
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(matches!(IgParams::new(0.0, 1.0), Err(IgError::InvalidMu(_))));
        assert!(matches!(IgParams::new(-1.0, 1.0), Err(IgError::InvalidMu(_))));
        assert!(matches!(IgParams::new(f64::NAN, 1.0), Err(IgError::InvalidMu(_))));
        assert!(matches!(IgParams::new(f64::INFINITY, 1.0), Err(IgError::InvalidMu(_))));
        assert!(matches!(IgParams::new(1.0, 0.0), Err(IgError::InvalidLambda(_))));
        assert!(matches!(IgParams::new(1.0, -3.0), Err(IgError::InvalidLambda(_))));
        assert!(matches!(IgParams::new(1.0, f64::NAN), Err(IgError::InvalidLambda(_))));
    }

    #[test]
    fn variance_scales_with_cube_of_mean() {
        let p = IgParams::new(3.0, 2.0).unwrap();
        assert_eq!(p.variance(), 13.5);
    }
}
