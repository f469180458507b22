use ig_core::IgParams;

use crate::error::FptError;

/// Drift-diffusion setup: the process `X(t) = nu t + sigma W(t)`
/// started at the origin, absorbed at the level `barrier` above it.
///
/// Zero or negative drift still defines a process (it just may never
/// hit, so runs are censored); the diffusion coefficient and barrier
/// must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftParams {
    nu: f64,
    sigma: f64,
    barrier: f64,
}

impl DriftParams {
    pub fn new(nu: f64, sigma: f64, barrier: f64) -> Result<Self, FptError> {
        if !nu.is_finite() {
            return Err(FptError::InvalidParameter {
                name: "nu",
                value: nu,
            });
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(FptError::InvalidParameter {
                name: "sigma",
                value: sigma,
            });
        }
        if !(barrier > 0.0) || !barrier.is_finite() {
            return Err(FptError::InvalidParameter {
                name: "barrier",
                value: barrier,
            });
        }
        Ok(DriftParams { nu, sigma, barrier })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn barrier(&self) -> f64 {
        self.barrier
    }
}

/// Hitting-time law of the drifted process.
///
/// The density of the time to reach `a` from below,
/// `a / sqrt(2 pi sigma^2 t^3) * exp(-(a - nu t)^2 / (2 sigma^2 t))`,
/// matches the inverse Gaussian density term by term under
/// `mu = a / nu`, `lambda = a^2 / sigma^2`. Positive drift is what
/// gives the hitting time a finite mean; otherwise there is no proper
/// two-parameter law to map onto.
pub fn fpt_to_ig_params(p: &DriftParams) -> Result<IgParams, FptError> {
    if p.nu <= 0.0 {
        return Err(FptError::NonPositiveDrift { nu: p.nu });
    }
    let mu = p.barrier / p.nu;
    let lambda = p.barrier * p.barrier / (p.sigma * p.sigma);
    Ok(IgParams::new(mu, lambda).expect("positive by construction"))
}
