use nalgebra::{DMatrix, DVector};

use crate::error::GlmError;
use crate::irls::{assemble_design, predict, GlmFit};

/// Residual scale. All three are standardized by the square root of the
/// estimated dispersion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualKind {
    Pearson,
    Anscombe,
    Deviance,
}

/// Unit deviance `(y - mu)^2 / (mu^2 y)`. Zero exactly when `y == mu`.
pub fn unit_deviance(y: f64, mu: f64) -> Result<f64, GlmError> {
    if !y.is_finite() || y <= 0.0 {
        return Err(GlmError::NonPositiveScalar {
            name: "y",
            value: y,
        });
    }
    if !mu.is_finite() || mu <= 0.0 {
        return Err(GlmError::NonPositiveScalar {
            name: "mu",
            value: mu,
        });
    }
    let d = y - mu;
    Ok(d * d / (mu * mu * y))
}

/// Standardized residuals of a fit on the given data.
///
/// Pearson residuals divide by the standard deviation implied by the
/// cubic variance function, so their squares sum to `n - p` under the
/// dispersion estimate. Anscombe residuals apply the normalizing log
/// transform; deviance residuals carry the sign of `y - mu`.
pub fn residuals(
    fit: &GlmFit,
    x: &DMatrix<f64>,
    y: &DVector<f64>,
    kind: ResidualKind,
) -> Result<Vec<f64>, GlmError> {
    let pred = predict(fit, x)?;
    if y.len() != pred.values.len() {
        return Err(GlmError::DimensionMismatch {
            expected: pred.values.len(),
            got: y.len(),
        });
    }
    for (index, &value) in y.iter().enumerate() {
        if !value.is_finite() || value <= 0.0 {
            return Err(GlmError::NonPositiveResponse { index, value });
        }
    }
    let sqrt_phi = fit.dispersion.sqrt();
    let mut out = Vec::with_capacity(y.len());
    for i in 0..y.len() {
        let m = pred.values[i];
        if !m.is_finite() || m <= 0.0 {
            return Err(GlmError::NonPositiveFittedMean { index: i });
        }
        let r = match kind {
            ResidualKind::Pearson => (y[i] - m) / (sqrt_phi * m.powf(1.5)),
            ResidualKind::Anscombe => (y[i].ln() - m.ln()) / (sqrt_phi * m.sqrt()),
            ResidualKind::Deviance => {
                let d = unit_deviance(y[i], m)?;
                (y[i] - m).signum() * (d / fit.dispersion).sqrt()
            }
        };
        out.push(r);
    }
    Ok(out)
}

/// Diagonal of the weighted hat matrix `H = B (B^T B)^{-1} B^T` with
/// `B = sqrt(W) X` at the fitted means, computed from the thin Q factor.
/// Entries lie in `[0, 1]` and sum to the number of coefficients.
pub fn hat_diagonal(fit: &GlmFit, x: &DMatrix<f64>) -> Result<Vec<f64>, GlmError> {
    let pred = predict(fit, x)?;
    let design = assemble_design(x, fit.spec.intercept);
    let n = design.nrows();
    let mut scaled = design;
    for i in 0..n {
        let m = pred.values[i];
        if !m.is_finite() || m <= 0.0 {
            return Err(GlmError::NonPositiveFittedMean { index: i });
        }
        let slope = fit.spec.link.dmu_deta(m);
        let w = slope * slope / (m * m * m);
        scaled.row_mut(i).scale_mut(w.sqrt());
    }
    let q = scaled.qr().q();
    let mut h = Vec::with_capacity(n);
    for i in 0..n {
        let leverage: f64 = q.row(i).iter().map(|v| v * v).sum();
        h.push(leverage.clamp(0.0, 1.0));
    }
    Ok(h)
}

/// Cook's distance for each observation,
/// `D_i = r_i^2 h_i / (p (1 - h_i)^2)` with Pearson residuals `r_i` and
/// leverages `h_i`. An observation with leverage one has no deleted fit,
/// so it is reported as an error rather than an infinite distance.
pub fn cooks_distance(
    fit: &GlmFit,
    x: &DMatrix<f64>,
    y: &DVector<f64>,
) -> Result<Vec<f64>, GlmError> {
    let h = hat_diagonal(fit, x)?;
    let pearson = residuals(fit, x, y, ResidualKind::Pearson)?;
    let p = fit.p as f64;
    let mut out = Vec::with_capacity(h.len());
    for (index, (&hi, &ri)) in h.iter().zip(pearson.iter()).enumerate() {
        if hi >= 1.0 - 1e-12 {
            return Err(GlmError::LeverageOne { index });
        }
        let denom = 1.0 - hi;
        out.push(ri * ri * hi / (p * denom * denom));
    }
    Ok(out)
}
