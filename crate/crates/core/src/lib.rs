//! Inverse Gaussian distribution primitives.
//!
//! The inverse Gaussian (Wald) law IG(mu, lambda) has density
//!
//! ```text
//! f(x; mu, lambda) = sqrt(lambda / (2 pi x^3))
//!                    * exp(-lambda (x - mu)^2 / (2 mu^2 x)),   x > 0
//! ```
//!
//! with mean `mu > 0` and shape `lambda > 0`. This crate provides the
//! validated parameter type, exact density/CDF evaluation that stays
//! finite over the whole support, a numeric quantile function, an exact
//! rejection sampler, the natural-parameter (exponential family) form,
//! and the deterministic RNG used by every stochastic routine in the
//! workspace.

pub mod canonical;
mod density;
mod error;
mod params;
mod quantile;
pub mod rng;
mod sample;
pub mod special;

pub use canonical::CanonicalForm;
pub use error::IgError;
pub use params::IgParams;
