use crate::error::DiagError;

/// Prediction-error summary on the original response scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorMetrics {
    pub mse: f64,
    pub mae: f64,
    pub r2: f64,
}

/// Mean squared error, mean absolute error, and R-squared of a
/// prediction against the observed response.
///
/// R-squared is `1 - SS_res / SS_tot` with the total sum of squares
/// centered on the mean of `y`, so predicting that mean everywhere
/// scores exactly zero and a perfect prediction scores exactly one.
pub fn error_metrics(y: &[f64], yhat: &[f64]) -> Result<ErrorMetrics, DiagError> {
    if y.is_empty() {
        return Err(DiagError::EmptyInput);
    }
    if y.len() != yhat.len() {
        return Err(DiagError::LengthMismatch {
            expected: y.len(),
            got: yhat.len(),
        });
    }
    let n = y.len() as f64;
    let mean = y.iter().sum::<f64>() / n;
    let mut ss_res = 0.0;
    let mut abs_sum = 0.0;
    let mut ss_tot = 0.0;
    for (&yi, &fi) in y.iter().zip(yhat) {
        let e = yi - fi;
        ss_res += e * e;
        abs_sum += e.abs();
        ss_tot += (yi - mean) * (yi - mean);
    }
    if ss_tot == 0.0 {
        return Err(DiagError::ZeroVarianceTarget { value: y[0] });
    }
    Ok(ErrorMetrics {
        mse: ss_res / n,
        mae: abs_sum / n,
        r2: 1.0 - ss_res / ss_tot,
    })
}
