//! Generalized linear model with an inverse Gaussian response.
//!
//! The variance function is `V(mu) = mu^3`. Fitting runs iteratively
//! reweighted least squares on a dense design matrix, with step-halving to
//! keep every fitted mean positive. Three link functions are supported:
//! identity, log, and the canonical inverse-squared link `eta = 1/mu^2`.
//!
//! The dispersion is estimated from the Pearson statistic, and the reported
//! log-likelihood profiles out the shape parameter, so an intercept-only
//! identity fit reproduces the closed-form maximum likelihood fit of the
//! plain distribution.

mod criteria;
mod error;
mod irls;
mod link;
mod residuals;

pub use criteria::{aic_bic, information_criteria};
pub use error::GlmError;
pub use irls::{irls_fit, predict, GlmFit, GlmSpec, Predictions};
pub use link::Link;
pub use residuals::{cooks_distance, hat_diagonal, residuals, unit_deviance, ResidualKind};
