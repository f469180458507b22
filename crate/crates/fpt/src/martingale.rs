use ig_core::rng::SplitMix64;

/// Monte Carlo check that `exp(a W(t) - a^2 t / 2)` has unit mean
/// when `W(t) ~ Normal(0, t)`.
///
/// Returns the sample mean over `n` independent draws and its
/// standard error. At `a = 0` the integrand is the constant one, so
/// both come back exact.
///
/// # Panics
/// Needs `t > 0` and at least 100 draws.
pub fn martingale_check(a: f64, t: f64, n: usize, seed: u64) -> (f64, f64) {
    assert!(t > 0.0, "martingale_check needs a positive horizon");
    assert!(n >= 100, "martingale_check needs at least 100 draws");
    let mut rng = SplitMix64::new(seed);
    let scale = a * t.sqrt();
    let offset = -0.5 * a * a * t;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..n {
        let m = (scale * rng.next_normal() + offset).exp();
        sum += m;
        sum_sq += m * m;
    }
    let nn = n as f64;
    let mean = sum / nn;
    let var = (sum_sq - nn * mean * mean).max(0.0) / (nn - 1.0);
    (mean, (var / nn).sqrt())
}
