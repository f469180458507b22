use ig_inference::{ks_test, KsResult};

use crate::error::FptError;
use crate::params::fpt_to_ig_params;
use crate::simulate::FptSample;

/// Kolmogorov-Smirnov distance between the recorded hitting times and
/// the closed-form law implied by the sample's drift parameters.
///
/// Censored paths would bias the empirical CDF toward early hits, so
/// any censoring is a hard error; rerun with a longer horizon instead
/// of comparing a truncated sample.
pub fn empirical_vs_theoretical(sample: &FptSample) -> Result<KsResult, FptError> {
    if sample.censored > 0 {
        return Err(FptError::CensoredSample {
            censored: sample.censored,
        });
    }
    if sample.hits.is_empty() {
        return Err(FptError::NoPaths);
    }
    let ig = fpt_to_ig_params(&sample.params)?;
    let result = ks_test(&sample.hits, |t| {
        if t <= 0.0 {
            0.0
        } else {
            ig.cdf(t).expect("positive argument is inside the support")
        }
    })
    .expect("hits are nonempty and finite");
    Ok(result)
}
