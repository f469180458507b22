use nalgebra::{DMatrix, DVector};

use crate::error::GlmError;
use crate::link::Link;

/// Fitting configuration.
///
/// `tolerance` bounds the relative change in deviance between accepted
/// steps; iteration also stops early when the coefficient update falls
/// below `1e-10` in max-norm. `intercept` prepends a column of ones to
/// the design matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlmSpec {
    pub link: Link,
    pub max_iterations: usize,
    pub tolerance: f64,
    pub intercept: bool,
}

impl Default for GlmSpec {
    fn default() -> Self {
        GlmSpec {
            link: Link::Identity,
            max_iterations: 100,
            tolerance: 1e-8,
            intercept: true,
        }
    }
}

impl GlmSpec {
    fn validate(&self) -> Result<(), GlmError> {
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(GlmError::InvalidSpec("tolerance must be a positive real"));
        }
        if self.max_iterations == 0 {
            return Err(GlmError::InvalidSpec("max_iterations must be at least 1"));
        }
        Ok(())
    }
}

/// A converged fit. `p` counts coefficients including any intercept,
/// `fitted` is the mean vector on the training design, and `trace`
/// records the deviance after every accepted step.
#[derive(Debug, Clone, PartialEq)]
pub struct GlmFit {
    pub beta: DVector<f64>,
    pub dispersion: f64,
    pub deviance: f64,
    pub loglik: f64,
    pub vcov: DMatrix<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub n: usize,
    pub p: usize,
    pub spec: GlmSpec,
    pub fitted: DVector<f64>,
    pub trace: Vec<f64>,
}

/// Mean predictions for a new predictor matrix.
///
/// `non_positive` lists the rows whose predicted mean is not a strictly
/// positive real. The identity link can legitimately produce such values
/// on extrapolated inputs; they are reported rather than clamped.
#[derive(Debug, Clone, PartialEq)]
pub struct Predictions {
    pub values: DVector<f64>,
    pub non_positive: Vec<usize>,
}

pub(crate) fn assemble_design(x: &DMatrix<f64>, intercept: bool) -> DMatrix<f64> {
    if !intercept {
        return x.clone();
    }
    let n = x.nrows();
    let mut design = DMatrix::zeros(n, x.ncols() + 1);
    design.column_mut(0).fill(1.0);
    design.view_mut((0, 1), (n, x.ncols())).copy_from(x);
    design
}

fn check_design_finite(x: &DMatrix<f64>) -> Result<(), GlmError> {
    for col in 0..x.ncols() {
        for row in 0..x.nrows() {
            if !x[(row, col)].is_finite() {
                return Err(GlmError::NonFiniteDesign { row, col });
            }
        }
    }
    Ok(())
}

fn check_response(y: &DVector<f64>) -> Result<(), GlmError> {
    for (index, &value) in y.iter().enumerate() {
        if !value.is_finite() || value <= 0.0 {
            return Err(GlmError::NonPositiveResponse { index, value });
        }
    }
    Ok(())
}

/// Sum of unit deviances `(y - mu)^2 / (mu^2 y)` over the sample.
pub(crate) fn total_deviance(y: &DVector<f64>, mu: &DVector<f64>) -> f64 {
    let mut total = 0.0;
    for i in 0..y.len() {
        let d = y[i] - mu[i];
        total += d * d / (mu[i] * mu[i] * y[i]);
    }
    total
}

/// Weighted least squares step: QR-solve `sqrt(W) X beta = sqrt(W) z`.
fn wls_solve(
    design: &DMatrix<f64>,
    sqrt_w: &DVector<f64>,
    target: &DVector<f64>,
) -> Result<DVector<f64>, GlmError> {
    let mut scaled = design.clone();
    for i in 0..scaled.nrows() {
        scaled.row_mut(i).scale_mut(sqrt_w[i]);
    }
    let qr = scaled.qr();
    let qt_b = qr.q().transpose() * target;
    qr.r()
        .solve_upper_triangular(&qt_b)
        .ok_or(GlmError::RankDeficientDesign)
}

/// Fits the model by iteratively reweighted least squares.
///
/// `x` holds one predictor per column, without an intercept column; the
/// intercept is added internally when the spec asks for one. The response
/// must be strictly positive. Iteration starts from `mu = y`, and every
/// step is halved (up to 30 times, toward the last accepted coefficients)
/// until the mean vector is strictly positive and the deviance does not
/// increase, so the recorded deviance trace is non-increasing.
pub fn irls_fit(
    x: &DMatrix<f64>,
    y: &DVector<f64>,
    spec: &GlmSpec,
) -> Result<GlmFit, GlmError> {
    spec.validate()?;
    if x.nrows() != y.len() {
        return Err(GlmError::DimensionMismatch {
            expected: x.nrows(),
            got: y.len(),
        });
    }
    check_design_finite(x)?;
    check_response(y)?;

    let design = assemble_design(x, spec.intercept);
    let n = design.nrows();
    let p = design.ncols();
    if n <= p {
        return Err(GlmError::InsufficientObservations { n, p });
    }

    // Collinearity check on the assembled design, against a tolerance tied
    // to the largest column norm so the criterion is scale-aware.
    let max_col_norm = design
        .column_iter()
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max);
    let rank_tol = 1e-10 * max_col_norm;
    let pivoted = design.clone().col_piv_qr();
    let r_factor = pivoted.r();
    let rank = (0..p).filter(|&j| r_factor[(j, j)].abs() > rank_tol).count();
    if rank < p {
        return Err(GlmError::RankDeficientDesign);
    }

    let link = spec.link;
    let mean_y = y.sum() / n as f64;
    // Feasible fallback for halving before any step has been accepted:
    // the flat fit through the sample mean. Without an intercept no
    // coefficient vector is guaranteed feasible, so there is no fallback.
    let flat_anchor: Option<DVector<f64>> = if spec.intercept {
        let mut b = DVector::zeros(p);
        b[0] = link.eta(mean_y);
        Some(b)
    } else {
        None
    };

    let mut mu = y.clone();
    let mut eta = mu.map(|m| link.eta(m));
    let mut beta: Option<DVector<f64>> = None;
    let mut dev_prev = f64::INFINITY;
    let mut trace: Vec<f64> = Vec::new();
    let mut converged = false;
    let mut iterations = 0;

    for iter in 1..=spec.max_iterations {
        iterations = iter;

        let mut sqrt_w = DVector::zeros(n);
        let mut target = DVector::zeros(n);
        for i in 0..n {
            let m = mu[i];
            let slope = link.dmu_deta(m);
            let w = slope * slope / (m * m * m);
            let z = eta[i] + (y[i] - m) / slope;
            let s = w.sqrt();
            sqrt_w[i] = s;
            target[i] = s * z;
            if !s.is_finite() || !target[i].is_finite() {
                return Err(GlmError::InvalidMeanDuringIteration { iteration: iter });
            }
        }

        let proposal = wls_solve(&design, &sqrt_w, &target)?;

        let anchor = beta.as_ref().or(flat_anchor.as_ref());
        let mut candidate = proposal;
        let mut accepted: Option<(DVector<f64>, DVector<f64>, DVector<f64>, f64)> = None;
        let mut saw_valid_mean = false;
        for _ in 0..=30 {
            let eta_c = &design * &candidate;
            let mu_c = eta_c.map(|e| link.mu(e));
            if mu_c.iter().all(|m| m.is_finite() && *m > 0.0) {
                saw_valid_mean = true;
                let dev_c = total_deviance(y, &mu_c);
                if dev_c.is_finite() && dev_c <= dev_prev * (1.0 + 1e-12) + 1e-12 {
                    accepted = Some((candidate, eta_c, mu_c, dev_c));
                    break;
                }
            }
            match anchor {
                Some(a) => candidate = (&candidate + a) * 0.5,
                None => break,
            }
        }

        let (beta_new, eta_new, mu_new, dev_new) = match accepted {
            Some(step) => step,
            None => {
                if saw_valid_mean && beta.is_some() {
                    // No improving step exists at this scale; keep the
                    // previous coefficients and let the update rule stop.
                    (beta.clone().unwrap(), eta.clone(), mu.clone(), dev_prev)
                } else {
                    return Err(GlmError::InvalidMeanDuringIteration { iteration: iter });
                }
            }
        };

        let update_small = match &beta {
            Some(prev) => (&beta_new - prev).amax() < 1e-10,
            None => false,
        };
        let rel_dev_change = if dev_prev.is_finite() {
            (dev_prev - dev_new).abs() / dev_prev.abs().max(1e-10)
        } else {
            f64::INFINITY
        };

        trace.push(dev_new);
        beta = Some(beta_new);
        eta = eta_new;
        mu = mu_new;
        dev_prev = dev_new;

        if rel_dev_change < spec.tolerance || update_small {
            converged = true;
            break;
        }
    }

    if !converged {
        return Err(GlmError::NonConvergence { trace });
    }
    let beta = beta.expect("a step was accepted before convergence");
    let deviance = dev_prev;

    let dof = (n - p) as f64;
    let mut pearson_sq = 0.0;
    for i in 0..n {
        let m = mu[i];
        let r = y[i] - m;
        pearson_sq += r * r / (m * m * m);
    }
    let dispersion = pearson_sq / dof;
    if !(dispersion > 0.0) || !dispersion.is_finite() || deviance <= 0.0 {
        return Err(GlmError::PerfectFit);
    }

    // vcov = dispersion * (X^T W X)^{-1} at the final weights, computed
    // from the R factor of the weighted design: (R^T R)^{-1} = R^{-1} R^{-T}.
    let mut sqrt_w = DVector::zeros(n);
    for i in 0..n {
        let m = mu[i];
        let slope = link.dmu_deta(m);
        sqrt_w[i] = (slope * slope / (m * m * m)).sqrt();
    }
    let mut scaled = design.clone();
    for i in 0..n {
        scaled.row_mut(i).scale_mut(sqrt_w[i]);
    }
    let r_final = scaled.qr().r();
    let r_inv = r_final
        .solve_upper_triangular(&DMatrix::identity(p, p))
        .ok_or(GlmError::RankDeficientDesign)?;
    let mut vcov = &r_inv * r_inv.transpose() * dispersion;
    // Symmetrize away rounding noise.
    for i in 0..p {
        for j in 0..i {
            let s = 0.5 * (vcov[(i, j)] + vcov[(j, i)]);
            vcov[(i, j)] = s;
            vcov[(j, i)] = s;
        }
    }

    // Log-likelihood with the shape parameter profiled out at n / deviance:
    // l = -1/2 sum ln(2 pi y^3) + (n/2) ln(n / deviance) - n/2.
    let nf = n as f64;
    let mut sum_log = 0.0;
    for &v in y.iter() {
        sum_log += (2.0 * std::f64::consts::PI).ln() + 3.0 * v.ln();
    }
    let loglik = -0.5 * sum_log + 0.5 * nf * (nf / deviance).ln() - 0.5 * nf;

    Ok(GlmFit {
        beta,
        dispersion,
        deviance,
        loglik,
        vcov,
        iterations,
        converged,
        n,
        p,
        spec: *spec,
        fitted: mu,
        trace,
    })
}

/// Applies the fitted coefficients to new predictors and inverts the link.
///
/// `x` must have the same number of predictor columns the model was fit
/// with (excluding the intercept, which is re-added internally).
pub fn predict(fit: &GlmFit, x: &DMatrix<f64>) -> Result<Predictions, GlmError> {
    let expected = fit.p - usize::from(fit.spec.intercept);
    if x.ncols() != expected {
        return Err(GlmError::DimensionMismatch {
            expected,
            got: x.ncols(),
        });
    }
    check_design_finite(x)?;
    let design = assemble_design(x, fit.spec.intercept);
    let eta = &design * &fit.beta;
    let values = eta.map(|e| fit.spec.link.mu(e));
    let non_positive = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_finite() || **v <= 0.0)
        .map(|(i, _)| i)
        .collect();
    Ok(Predictions {
        values,
        non_positive,
    })
}
