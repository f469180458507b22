/// Link function mapping the mean to the linear predictor.
///
/// `InverseSquared` is the canonical link for this family. It is taken with
/// the positive sign, `eta = 1/mu^2`, so the linear predictor must stay
/// strictly positive and the mean is decreasing in `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Link {
    #[default]
    Identity,
    Log,
    InverseSquared,
}

impl Link {
    /// `eta = g(mu)`. Defined for `mu > 0`.
    pub fn eta(self, mu: f64) -> f64 {
        match self {
            Link::Identity => mu,
            Link::Log => mu.ln(),
            Link::InverseSquared => 1.0 / (mu * mu),
        }
    }

    /// `mu = g^{-1}(eta)`. Outside the link's range this produces a
    /// non-finite or non-positive value that callers must reject.
    pub fn mu(self, eta: f64) -> f64 {
        match self {
            Link::Identity => eta,
            Link::Log => eta.exp(),
            Link::InverseSquared => 1.0 / eta.sqrt(),
        }
    }

    /// Derivative `d mu / d eta` evaluated at a valid mean.
    pub fn dmu_deta(self, mu: f64) -> f64 {
        match self {
            Link::Identity => 1.0,
            Link::Log => mu,
            // d/d eta of eta^{-1/2} = -eta^{-3/2}/2 = -mu^3/2.
            Link::InverseSquared => -0.5 * mu * mu * mu,
        }
    }

    /// Stable label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Link::Identity => "identity",
            Link::Log => "log",
            Link::InverseSquared => "inverse-squared",
        }
    }
}
