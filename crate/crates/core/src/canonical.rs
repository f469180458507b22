//! Natural-parameter (canonical exponential family) form.
//!
//! The inverse Gaussian density factors as
//! `f(x) = h(x) exp(eta1 * x + eta2 / x - A(eta))` with base measure
//! `h(x) = (2 pi x^3)^(-1/2)`, natural parameters
//! `eta1 = -lambda / (2 mu^2)`, `eta2 = -lambda / 2` (both negative on
//! the valid domain), and log-partition
//! `A(eta) = -2 sqrt(eta1 eta2) - (1/2) ln(-2 eta2)`.
//!
//! The gradient of `A` recovers the expected sufficient statistics:
//! `dA/deta1 = E[X] = mu` and `dA/deta2 = E[1/X] = 1/mu + 1/lambda`.

use crate::{IgError, IgParams};

/// Natural parameters `(eta1, eta2)`, both strictly negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalForm {
    eta1: f64,
    eta2: f64,
}

impl CanonicalForm {
    pub fn new(eta1: f64, eta2: f64) -> Result<Self, IgError> {
        if !(eta1.is_finite() && eta1 < 0.0) {
            return Err(IgError::InvalidNaturalParam { name: "eta1", value: eta1 });
        }
        if !(eta2.is_finite() && eta2 < 0.0) {
            return Err(IgError::InvalidNaturalParam { name: "eta2", value: eta2 });
        }
        Ok(Self { eta1, eta2 })
    }

    pub fn eta1(&self) -> f64 {
        self.eta1
    }

    pub fn eta2(&self) -> f64 {
        self.eta2
    }

    /// Mean parameterization: `lambda = -2 eta2`, `mu = sqrt(eta2 / eta1)`.
    pub fn to_params(&self) -> IgParams {
        let lambda = -2.0 * self.eta2;
        let mu = (self.eta2 / self.eta1).sqrt();
        IgParams::new(mu, lambda).expect("negative natural parameters map to valid moments")
    }

    /// Log-partition `A(eta) = -2 sqrt(eta1 eta2) - (1/2) ln(-2 eta2)`.
    pub fn log_partition(&self) -> f64 {
        -2.0 * (self.eta1 * self.eta2).sqrt() - 0.5 * (-2.0 * self.eta2).ln()
    }

    /// Sufficient statistics `T(x) = (x, 1/x)`.
    pub fn sufficient_stats(x: f64) -> (f64, f64) {
        (x, 1.0 / x)
    }

    /// Log base measure `ln h(x) = -(1/2) ln(2 pi x^3)`.
    pub fn log_base_measure(x: f64) -> f64 {
        -0.5 * (2.0 * std::f64::consts::PI * x * x * x).ln()
    }
}

impl IgParams {
    /// Natural parameters `eta1 = -lambda / (2 mu^2)`, `eta2 = -lambda / 2`.
    pub fn to_canonical(&self) -> CanonicalForm {
        CanonicalForm {
            eta1: -self.lambda() / (2.0 * self.mu() * self.mu()),
            eta2: -self.lambda() / 2.0,
        }
    }
}
