use ig_core::rng::SplitMix64;
use ig_glm::{irls_fit, predict, GlmSpec};
use nalgebra::{DMatrix, DVector};

use crate::error::DiagError;
use crate::metrics::{error_metrics, ErrorMetrics};

/// Cross-validation layout: `folds` groups dealt round-robin over the
/// (optionally shuffled) observation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CvConfig {
    pub folds: usize,
    pub seed: u64,
    pub shuffle: bool,
}

impl Default for CvConfig {
    fn default() -> Self {
        CvConfig {
            folds: 5,
            seed: 0,
            shuffle: true,
        }
    }
}

/// Metrics for one fold, with the rows that were held out.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldMetrics {
    pub fold: usize,
    pub test_indices: Vec<usize>,
    pub train: ErrorMetrics,
    pub test: ErrorMetrics,
}

/// Aggregate and per-fold cross-validation results. The aggregate rows
/// are unweighted means over folds; fold sizes differ by at most one,
/// so the weighting question is moot in practice.
#[derive(Debug, Clone, PartialEq)]
pub struct CvReport {
    pub train: ErrorMetrics,
    pub test: ErrorMetrics,
    pub folds: Vec<FoldMetrics>,
}

/// K-fold cross-validation of an inverse Gaussian GLM.
///
/// The partition is a deterministic function of the config: indices
/// are shuffled by the seeded generator (skipped when `shuffle` is
/// off) and then dealt round-robin, so every observation is held out
/// exactly once. Each fold refits on the remaining rows and scores
/// predictions on the response scale.
pub fn k_fold_cv(
    x: &DMatrix<f64>,
    y: &DVector<f64>,
    spec: &GlmSpec,
    config: &CvConfig,
) -> Result<CvReport, DiagError> {
    let n = y.len();
    if x.nrows() != n {
        return Err(DiagError::LengthMismatch {
            expected: n,
            got: x.nrows(),
        });
    }
    if config.folds < 2 || config.folds > n {
        return Err(DiagError::InvalidFolds {
            folds: config.folds,
            n,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    if config.shuffle {
        let mut rng = SplitMix64::new(config.seed);
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            order.swap(i, j);
        }
    }
    let p = x.ncols() + usize::from(spec.intercept);
    let mut folds = Vec::with_capacity(config.folds);
    for f in 0..config.folds {
        let mut test_indices: Vec<usize> = order
            .iter()
            .copied()
            .skip(f)
            .step_by(config.folds)
            .collect();
        test_indices.sort_unstable();
        let mut held_out = vec![false; n];
        for &i in &test_indices {
            held_out[i] = true;
        }
        let train_indices: Vec<usize> = (0..n).filter(|&i| !held_out[i]).collect();
        if train_indices.len() <= p {
            return Err(DiagError::FoldTooSmall {
                fold: f,
                n: train_indices.len(),
                p,
            });
        }
        let x_train = x.select_rows(train_indices.iter());
        let y_train = DVector::from_iterator(
            train_indices.len(),
            train_indices.iter().map(|&i| y[i]),
        );
        let fit = irls_fit(&x_train, &y_train, spec)?;
        let x_test = x.select_rows(test_indices.iter());
        let y_test: Vec<f64> = test_indices.iter().map(|&i| y[i]).collect();
        let predicted = predict(&fit, &x_test)?;
        let train = error_metrics(y_train.as_slice(), fit.fitted.as_slice())?;
        let test = error_metrics(&y_test, predicted.values.as_slice())?;
        folds.push(FoldMetrics {
            fold: f,
            test_indices,
            train,
            test,
        });
    }
    let k = folds.len() as f64;
    let mut sums = [0.0; 6];
    for fm in &folds {
        sums[0] += fm.train.mse;
        sums[1] += fm.train.mae;
        sums[2] += fm.train.r2;
        sums[3] += fm.test.mse;
        sums[4] += fm.test.mae;
        sums[5] += fm.test.r2;
    }
    Ok(CvReport {
        train: ErrorMetrics {
            mse: sums[0] / k,
            mae: sums[1] / k,
            r2: sums[2] / k,
        },
        test: ErrorMetrics {
            mse: sums[3] / k,
            mae: sums[4] / k,
            r2: sums[5] / k,
        },
        folds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ig_glm::Link;

    fn line_data(n: usize) -> (DMatrix<f64>, DVector<f64>) {
        // Positive response with visible curvature so no fold fits it
        // exactly.
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / n as f64).collect();
        let x = DMatrix::from_column_slice(n, 1, &xs);
        let y = DVector::from_iterator(n, xs.iter().map(|v| 2.0 + v + 0.3 * v * v));
        (x, y)
    }

    #[test]
    fn ten_rows_and_five_folds_give_pairs() {
        let (x, y) = line_data(10);
        let config = CvConfig {
            folds: 5,
            seed: 11,
            shuffle: true,
        };
        let report = k_fold_cv(&x, &y, &GlmSpec::default(), &config).unwrap();
        assert_eq!(report.folds.len(), 5);
        let mut seen: Vec<usize> = Vec::new();
        for fm in &report.folds {
            assert_eq!(fm.test_indices.len(), 2);
            seen.extend_from_slice(&fm.test_indices);
        }
        seen.sort_unstable();
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn unshuffled_dealing_is_round_robin() {
        let (x, y) = line_data(10);
        let config = CvConfig {
            folds: 5,
            seed: 0,
            shuffle: false,
        };
        let report = k_fold_cv(&x, &y, &GlmSpec::default(), &config).unwrap();
        for (f, fm) in report.folds.iter().enumerate() {
            assert_eq!(fm.test_indices, vec![f, f + 5]);
        }
    }

    #[test]
    fn identical_configs_reproduce_bit_identical_reports() {
        let (x, y) = line_data(23);
        let config = CvConfig {
            folds: 4,
            seed: 99,
            shuffle: true,
        };
        let spec = GlmSpec {
            link: Link::Log,
            ..GlmSpec::default()
        };
        let a = k_fold_cv(&x, &y, &spec, &config).unwrap();
        let b = k_fold_cv(&x, &y, &spec, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn the_seed_controls_the_partition() {
        let (x, y) = line_data(12);
        let base = CvConfig {
            folds: 3,
            seed: 0,
            shuffle: true,
        };
        let other = CvConfig { seed: 1, ..base };
        let a = k_fold_cv(&x, &y, &GlmSpec::default(), &base).unwrap();
        let b = k_fold_cv(&x, &y, &GlmSpec::default(), &other).unwrap();
        let parts_a: Vec<_> = a.folds.iter().map(|f| f.test_indices.clone()).collect();
        let parts_b: Vec<_> = b.folds.iter().map(|f| f.test_indices.clone()).collect();
        assert_ne!(parts_a, parts_b);
    }

    #[test]
    fn fold_counts_outside_two_to_n_are_rejected() {
        let (x, y) = line_data(6);
        for folds in [0, 1, 7] {
            let config = CvConfig {
                folds,
                seed: 0,
                shuffle: false,
            };
            let err = k_fold_cv(&x, &y, &GlmSpec::default(), &config).unwrap_err();
            assert_eq!(err, DiagError::InvalidFolds { folds, n: 6 });
        }
    }

    #[test]
    fn leave_one_out_with_too_many_coefficients_is_rejected() {
        // Two predictors plus intercept against three training rows.
        let x = DMatrix::from_row_slice(4, 2, &[
            1.0, 2.0, //
            2.0, 1.0, //
            3.0, 3.0, //
            4.0, 2.5,
        ]);
        let y = DVector::from_column_slice(&[1.0, 2.0, 3.0, 4.0]);
        let config = CvConfig {
            folds: 4,
            seed: 0,
            shuffle: false,
        };
        let err = k_fold_cv(&x, &y, &GlmSpec::default(), &config).unwrap_err();
        assert_eq!(err, DiagError::FoldTooSmall { fold: 0, n: 3, p: 3 });
    }
}
