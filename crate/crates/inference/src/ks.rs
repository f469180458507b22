use crate::InferenceError;

/// How the K-S p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KsMethod {
    /// Kolmogorov limiting distribution applied directly, ignoring
    /// that the hypothesized CDF may carry estimated parameters. This
    /// matches common practice but is anti-conservative in that case.
    AsymptoticNaive,
    /// Parametric bootstrap: refits the model on each simulated
    /// replicate, which restores a valid null distribution.
    ParametricBootstrap,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
    pub method: KsMethod,
}

/// One-sample Kolmogorov-Smirnov statistic
/// `max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n)` on the sorted sample.
pub fn ks_statistic(
    sample: &[f64],
    cdf: impl Fn(f64) -> f64,
) -> Result<f64, InferenceError> {
    if sample.is_empty() {
        return Err(InferenceError::EmptySample);
    }
    for (index, &value) in sample.iter().enumerate() {
        if !value.is_finite() {
            return Err(InferenceError::NonFiniteValue { index, value });
        }
    }
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    Ok(d)
}

/// K-S test with the asymptotic p-value `Q(sqrt(n) * D)` from the
/// Kolmogorov limiting distribution, applied as-is (see
/// [`KsMethod::AsymptoticNaive`]).
pub fn ks_test(
    sample: &[f64],
    cdf: impl Fn(f64) -> f64,
) -> Result<KsResult, InferenceError> {
    let statistic = ks_statistic(sample, cdf)?;
    let t = (sample.len() as f64).sqrt() * statistic;
    Ok(KsResult {
        statistic,
        p_value: kolmogorov_sf(t),
        method: KsMethod::AsymptoticNaive,
    })
}

/// Survival function of the Kolmogorov distribution,
/// `Q(t) = 2 Σ_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2)`.
///
/// The alternating series converges slowly for small `t`, so below
/// 1.18 the theta-function form
/// `Q(t) = 1 - (sqrt(2 pi)/t) Σ_{k>=0} exp(-(2k+1)^2 pi^2 / (8 t^2))`
/// is used instead; both are exact expansions of the same law.
pub fn kolmogorov_sf(t: f64) -> f64 {
    if t <= 0.0 {
        return 1.0;
    }
    if t < 1.18 {
        let a = std::f64::consts::PI * std::f64::consts::PI / (8.0 * t * t);
        let mut sum = 0.0;
        for k in 0..8 {
            let m = (2 * k + 1) as f64;
            let term = (-m * m * a).exp();
            sum += term;
            if term < 1e-18 * sum.max(1e-300) {
                break;
            }
        }
        (1.0 - (2.0 * std::f64::consts::PI).sqrt() / t * sum).clamp(0.0, 1.0)
    } else {
        let mut sum = 0.0;
        for k in 1..40 {
            let kk = k as f64;
            let term = (-2.0 * kk * kk * t * t).exp();
            if term < 1e-18 {
                break;
            }
            sum += if k % 2 == 1 { term } else { -term };
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}
