use nalgebra::{Cholesky, DMatrix, DVector};

use ig_core::special::chi2_quantile;

use crate::error::DataError;
use crate::table::DataTable;

/// Row-wise squared Mahalanobis distances with the indices whose
/// distance exceeds the chi-square cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct OutlierReport {
    /// Squared distance per row, in row order.
    pub distances: Vec<f64>,
    /// Rows exceeding the threshold, ascending.
    pub flagged: Vec<usize>,
    /// Chi-square quantile at `1 - threshold_p` with one degree of
    /// freedom per selected column.
    pub threshold: f64,
}

/// Screens rows of the selected columns by squared Mahalanobis distance
/// against the column means and the sample covariance (denominator
/// `n - 1`). A row is flagged when its squared distance exceeds the
/// chi-square quantile at `1 - threshold_p`.
pub fn mahalanobis_outliers(
    table: &DataTable,
    columns: &[&str],
    threshold_p: f64,
) -> Result<OutlierReport, DataError> {
    if !(threshold_p > 0.0 && threshold_p < 1.0) {
        return Err(DataError::InvalidThreshold { value: threshold_p });
    }
    let d = columns.len();
    let n = table.n_rows();
    let mut selected: Vec<&[f64]> = Vec::with_capacity(d);
    for name in columns {
        selected.push(table.column(name)?);
    }
    if d == 0 || n < d + 1 {
        return Err(DataError::SingularCovariance);
    }

    let means: Vec<f64> = selected
        .iter()
        .map(|c| c.iter().sum::<f64>() / n as f64)
        .collect();
    let mut cov = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..=i {
            let mut acc = 0.0;
            for row in 0..n {
                acc += (selected[i][row] - means[i]) * (selected[j][row] - means[j]);
            }
            let value = acc / (n - 1) as f64;
            cov[(i, j)] = value;
            cov[(j, i)] = value;
        }
    }
    // Factorization alone can slip past an exactly singular matrix on
    // rounding noise, so gate on the determinant of the correlation
    // matrix (det(cov) over the product of variances), which is scale
    // free and zero for collinear columns.
    let det = cov.clone().determinant();
    let variance_product: f64 = (0..d).map(|i| cov[(i, i)]).product();
    if !(det > 1e-12 * variance_product) {
        return Err(DataError::SingularCovariance);
    }
    let chol = Cholesky::new(cov).ok_or(DataError::SingularCovariance)?;

    let threshold = chi2_quantile(1.0 - threshold_p, d as f64);
    let mut distances = Vec::with_capacity(n);
    let mut flagged = Vec::new();
    for row in 0..n {
        let centered = DVector::from_fn(d, |i, _| selected[i][row] - means[i]);
        let solved = chol.solve(&centered);
        let dist = centered.dot(&solved);
        if dist > threshold {
            flagged.push(row);
        }
        distances.push(dist);
    }
    Ok(OutlierReport {
        distances,
        flagged,
        threshold,
    })
}
