use ig_core::special::norm_quantile;
use ig_glm::{cooks_distance, hat_diagonal, predict, residuals, GlmFit, ResidualKind};
use ig_inference::DistributionComparison;
use nalgebra::{DMatrix, DVector};

use crate::error::DiagError;

/// Default histogram bin count for [`density_overlay`].
pub const DEFAULT_BINS: usize = 50;

/// Number of grid points each fitted density curve is sampled on.
pub const CURVE_POINTS: usize = 200;

/// Normal Q-Q pairs for a residual vector: (theoretical, observed)
/// order statistics at plotting positions `(i - 0.5) / n`, ascending
/// in both coordinates.
///
/// # Panics
/// Needs at least two residuals.
pub fn qq_points(residuals: &[f64]) -> Vec<(f64, f64)> {
    assert!(residuals.len() >= 2, "qq_points needs at least two residuals");
    let n = residuals.len();
    let mut sorted = residuals.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, observed)| {
            let p = (i as f64 + 0.5) / n as f64;
            (norm_quantile(p), observed)
        })
        .collect()
}

/// Numeric series behind the four standard residual panels.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticBundle {
    /// (fitted mean, Pearson residual) per observation.
    pub residual_vs_fitted: Vec<(f64, f64)>,
    /// (fitted mean, sqrt |leverage-standardized Pearson residual|).
    pub scale_location: Vec<(f64, f64)>,
    /// (observation index, Cook's distance).
    pub cooks: Vec<(usize, f64)>,
    /// Normal Q-Q pairs of the Anscombe residuals.
    pub qq_anscombe: Vec<(f64, f64)>,
    /// Reference band for the standardized residual panels.
    pub band: (f64, f64),
}

/// Assembles plot-ready series for a fitted model: residual-vs-fitted,
/// scale-location, Cook's distance, and an Anscombe Q-Q set, plus the
/// plus-or-minus-two band drawn on the standardized panels.
pub fn diagnostic_bundle(
    fit: &GlmFit,
    x: &DMatrix<f64>,
    y: &DVector<f64>,
) -> Result<DiagnosticBundle, DiagError> {
    let fitted = predict(fit, x)?.values;
    let pearson = residuals(fit, x, y, ResidualKind::Pearson)?;
    let anscombe = residuals(fit, x, y, ResidualKind::Anscombe)?;
    let cooks_series = cooks_distance(fit, x, y)?;
    // cooks_distance has already rejected unit leverage, so 1 - h is
    // bounded away from zero here.
    let leverage = hat_diagonal(fit, x)?;
    let residual_vs_fitted: Vec<(f64, f64)> = fitted
        .iter()
        .copied()
        .zip(pearson.iter().copied())
        .collect();
    let scale_location: Vec<(f64, f64)> = fitted
        .iter()
        .zip(pearson.iter().zip(&leverage))
        .map(|(&m, (&r, &h))| (m, (r / (1.0 - h).sqrt()).abs().sqrt()))
        .collect();
    let cooks: Vec<(usize, f64)> = cooks_series.into_iter().enumerate().collect();
    let qq_anscombe = qq_points(&anscombe);
    Ok(DiagnosticBundle {
        residual_vs_fitted,
        scale_location,
        cooks,
        qq_anscombe,
        band: (-2.0, 2.0),
    })
}

/// One fitted density curve sampled on the shared grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCurve {
    pub label: &'static str,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

/// Density-normalized histogram of a sample plus the fitted curves
/// from a distribution comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOverlay {
    /// `bins + 1` edges spanning [min, max].
    pub bin_edges: Vec<f64>,
    /// Per-bin density heights; heights times widths sum to one.
    pub densities: Vec<f64>,
    pub curves: Vec<DensityCurve>,
}

/// Histogram of the sample over [min, max] with each fitted density
/// evaluated on a 200-point grid over the same span.
///
/// # Panics
/// Needs a nonempty sample with a nonzero range and at least one bin.
pub fn density_overlay(
    sample: &[f64],
    comparison: &DistributionComparison,
    bins: usize,
) -> DensityOverlay {
    assert!(!sample.is_empty(), "density_overlay needs a nonempty sample");
    assert!(bins >= 1, "density_overlay needs at least one bin");
    let lo = sample.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = sample.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    assert!(hi > lo, "density_overlay needs a sample with nonzero range");
    let span = hi - lo;
    let width = span / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in sample {
        let idx = (((v - lo) / span) * bins as f64) as usize;
        counts[idx.min(bins - 1)] += 1;
    }
    let area = sample.len() as f64 * width;
    let densities: Vec<f64> = counts.iter().map(|&c| c as f64 / area).collect();
    let bin_edges: Vec<f64> = (0..=bins)
        .map(|j| if j == bins { hi } else { lo + width * j as f64 })
        .collect();
    let xs: Vec<f64> = (0..CURVE_POINTS)
        .map(|j| {
            if j == CURVE_POINTS - 1 {
                hi
            } else {
                lo + span * j as f64 / (CURVE_POINTS - 1) as f64
            }
        })
        .collect();
    let curves = comparison
        .rows
        .iter()
        .map(|row| DensityCurve {
            label: row.model.kind().label(),
            xs: xs.clone(),
            ys: xs.iter().map(|&x| row.model.log_pdf(x).exp()).collect(),
        })
        .collect();
    DensityOverlay {
        bin_edges,
        densities,
        curves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use ig_glm::{GlmSpec, Link};

    #[test]
    fn two_residuals_map_to_the_quartile_quantiles() {
        let points = qq_points(&[1.0, -1.0]);
        assert_relative_eq!(points[0].0, -0.6744897501960817, max_relative = 1e-12);
        assert_relative_eq!(points[1].0, 0.6744897501960817, max_relative = 1e-12);
        assert_eq!(points[0].1, -1.0);
        assert_eq!(points[1].1, 1.0);
    }

    #[test]
    fn residuals_built_from_the_plotting_positions_land_on_the_diagonal() {
        let n = 40;
        let values: Vec<f64> = (0..n)
            .map(|i| norm_quantile((i as f64 + 0.5) / n as f64))
            .collect();
        let mut shuffled = values.clone();
        shuffled.reverse();
        shuffled.swap(3, 17);
        for (theoretical, observed) in qq_points(&shuffled) {
            assert_eq!(theoretical, observed);
        }
    }

    #[test]
    fn qq_output_is_permutation_invariant_and_length_preserving() {
        let a = [0.3, -1.2, 0.8, 2.4, -0.5];
        let mut b = a;
        b.swap(0, 4);
        b.swap(1, 3);
        assert_eq!(qq_points(&a), qq_points(&b));
        assert_eq!(qq_points(&a).len(), a.len());
    }

    fn interpolating_fit() -> (GlmFit, DMatrix<f64>, DVector<f64>) {
        // A hand-assembled identity-link fit whose coefficients
        // reproduce the response exactly through the same matrix
        // product the predictor uses.
        let n = 8;
        let xs: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 / 4.0).collect();
        let x = DMatrix::from_column_slice(n, 1, &xs);
        let beta = DVector::from_column_slice(&[2.0, 0.75]);
        let mut design = DMatrix::zeros(n, 2);
        for i in 0..n {
            design[(i, 0)] = 1.0;
            design[(i, 1)] = xs[i];
        }
        let y = &design * &beta;
        let fit = GlmFit {
            beta,
            dispersion: 1.0,
            deviance: 0.0,
            loglik: 0.0,
            vcov: DMatrix::zeros(2, 2),
            iterations: 1,
            converged: true,
            n,
            p: 2,
            spec: GlmSpec {
                link: Link::Identity,
                ..GlmSpec::default()
            },
            fitted: y.clone(),
            trace: vec![0.0],
        };
        (fit, x, y)
    }

    #[test]
    fn a_perfect_fit_produces_identically_zero_series() {
        let (fit, x, y) = interpolating_fit();
        let bundle = diagnostic_bundle(&fit, &x, &y).unwrap();
        assert_eq!(bundle.residual_vs_fitted.len(), y.len());
        for &(_, r) in &bundle.residual_vs_fitted {
            assert_eq!(r, 0.0);
        }
        for &(_, s) in &bundle.scale_location {
            assert_eq!(s, 0.0);
        }
        for &(_, d) in &bundle.cooks {
            assert_eq!(d, 0.0);
        }
        for &(_, observed) in &bundle.qq_anscombe {
            assert_eq!(observed, 0.0);
        }
        assert_eq!(bundle.band, (-2.0, 2.0));
    }

    #[test]
    fn bundle_series_share_the_observation_count() {
        let (fit, x, y) = interpolating_fit();
        let bundle = diagnostic_bundle(&fit, &x, &y).unwrap();
        let n = y.len();
        assert_eq!(bundle.residual_vs_fitted.len(), n);
        assert_eq!(bundle.scale_location.len(), n);
        assert_eq!(bundle.cooks.len(), n);
        assert_eq!(bundle.qq_anscombe.len(), n);
        assert_eq!(bundle.cooks[n - 1].0, n - 1);
    }
}
