//! Physical check of the inverse Gaussian law.
//!
//! Drifted Brownian motion `X(t) = nu t + sigma W(t)` first reaches a
//! barrier `a > 0` at a random time whose distribution is
//! `IG(a/nu, a^2/sigma^2)`. This crate simulates such paths with an
//! Euler scheme (plus an optional Brownian-bridge correction for
//! within-step crossings), maps drift setups to their hitting laws,
//! compares empirical hitting times against the closed form, and
//! Monte Carlo-checks the exponential martingale identity the
//! derivation rests on.

mod error;
mod martingale;
mod params;
mod simulate;
mod verify;

pub use error::FptError;
pub use martingale::martingale_check;
pub use params::{fpt_to_ig_params, DriftParams};
pub use simulate::{default_horizon, simulate_fpt, FptSample};
pub use verify::empirical_vs_theoretical;
