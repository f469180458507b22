use ig_core::special::{norm_quantile, student_t_two_sided_p};
use ig_data::DataTable;

use crate::error::DiagError;

/// Pearson correlation of one predictor with the target, with its
/// significance test and 95% confidence interval.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationRow {
    pub pair: String,
    pub n: usize,
    pub r: f64,
    pub t_statistic: f64,
    pub p_value: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Correlates every non-target column with `target`, in table order.
///
/// The t-statistic is `r * sqrt(n - 2) / sqrt(1 - r^2)` with a
/// two-sided Student-t p-value on `n - 2` degrees of freedom, and the
/// interval comes from the Fisher z-transform. An exactly collinear
/// pair is reported with `r = ±1`, an infinite t, a zero p-value, and
/// a degenerate interval, since the finite formulas no longer apply.
pub fn correlation_report(
    table: &DataTable,
    target: &str,
) -> Result<Vec<CorrelationRow>, DiagError> {
    let n = table.n_rows();
    if n < 3 {
        return Err(DiagError::TooFewRows { n });
    }
    let target_col = table.column(target)?;
    let (target_mean, target_ss) = center(target_col);
    if target_ss == 0.0 {
        return Err(DiagError::ConstantColumn {
            name: target.to_string(),
        });
    }
    let z95 = norm_quantile(0.975);
    let nn = n as f64;
    let mut rows = Vec::new();
    for name in table.names() {
        if name == target {
            continue;
        }
        let col = table.column(name)?;
        let (col_mean, col_ss) = center(col);
        if col_ss == 0.0 {
            return Err(DiagError::ConstantColumn { name: name.clone() });
        }
        let mut cross = 0.0;
        for (&a, &b) in col.iter().zip(target_col) {
            cross += (a - col_mean) * (b - target_mean);
        }
        let r = (cross / (col_ss.sqrt() * target_ss.sqrt())).clamp(-1.0, 1.0);
        let row = if 1.0 - r * r <= 1e-12 {
            let sign = if r < 0.0 { -1.0 } else { 1.0 };
            CorrelationRow {
                pair: format!("{name}-{target}"),
                n,
                r: sign,
                t_statistic: sign * f64::INFINITY,
                p_value: 0.0,
                ci_low: sign,
                ci_high: sign,
            }
        } else {
            let t = r * (nn - 2.0).sqrt() / (1.0 - r * r).sqrt();
            let z = 0.5 * ((1.0 + r) / (1.0 - r)).ln();
            let half_width = z95 / (nn - 3.0).sqrt();
            CorrelationRow {
                pair: format!("{name}-{target}"),
                n,
                r,
                t_statistic: t,
                p_value: student_t_two_sided_p(t, nn - 2.0),
                ci_low: (z - half_width).tanh(),
                ci_high: (z + half_width).tanh(),
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

fn center(values: &[f64]) -> (f64, f64) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let ss = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
    (mean, ss)
}
