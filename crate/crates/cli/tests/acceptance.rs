//! Acceptance gate: one test per release criterion, each line of the
//! harness output reading as a pass/fail verdict for that criterion.
//!
//! The criteria cross-check independent implementations against each
//! other (closed forms against numerical optimization, analytic
//! matrices against Monte Carlo, simulation against theory) and pin
//! the dataset-facing behavior. Criterion 9 needs the full plant
//! dataset and is skipped, reported as such, when the `CCPP_DATA`
//! environment variable does not point at it.

use std::process::Command;
use std::time::Instant;

use ig_core::rng::SplitMix64;
use ig_core::special::norm_quantile;
use ig_core::IgParams;
use ig_data::{load_csv, CcppSchema};
use ig_diagnostics::{correlation_report, k_fold_cv, CvConfig};
use ig_fpt::{empirical_vs_theoretical, martingale_check, simulate_fpt, DriftParams};
use ig_glm::{irls_fit, GlmSpec, Link};
use ig_inference::{
    bias_corrected_lambda, compare_distributions_with, fisher_information, fit_mle,
    ks_statistic, log_likelihood, FitConvention, ModelKind,
};
use nalgebra::{DMatrix, DVector};

const FIXTURE: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../data/testdata/ccpp_sample.csv"
);

/// Derivative-free maximization of the log-likelihood over
/// (ln mu, ln lambda) by the Nelder-Mead simplex, started from moment
/// estimates. Shares no formula with the closed-form estimator beyond
/// the likelihood itself.
fn numeric_mle(sample: &[f64]) -> (f64, f64) {
    let objective = |z: [f64; 2]| {
        let params = IgParams::new(z[0].exp(), z[1].exp()).unwrap();
        -log_likelihood(sample, &params).unwrap()
    };
    let n = sample.len() as f64;
    let mean = sample.iter().sum::<f64>() / n;
    let variance = sample.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    let start = [mean.ln(), (mean.powi(3) / variance.max(1e-300)).ln()];
    nelder_mead(objective, start)
}

fn nelder_mead(f: impl Fn([f64; 2]) -> f64, start: [f64; 2]) -> (f64, f64) {
    let step = 0.25;
    let mut simplex = [
        start,
        [start[0] + step, start[1]],
        [start[0], start[1] + step],
    ];
    let mut values = simplex.map(&f);
    for _ in 0..600 {
        let mut order = [0, 1, 2];
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let [best, mid, worst] = order;

        let diameter = simplex
            .iter()
            .flat_map(|a| simplex.iter().map(move |b| {
                (a[0] - b[0]).abs().max((a[1] - b[1]).abs())
            }))
            .fold(0.0, f64::max);
        let spread = values[worst] - values[best];
        if diameter < 1e-9 && spread < 1e-11 * (1.0 + values[best].abs()) {
            break;
        }

        let centroid = [
            0.5 * (simplex[best][0] + simplex[mid][0]),
            0.5 * (simplex[best][1] + simplex[mid][1]),
        ];
        let along = |t: f64| {
            [
                centroid[0] + t * (centroid[0] - simplex[worst][0]),
                centroid[1] + t * (centroid[1] - simplex[worst][1]),
            ]
        };

        let reflected = along(1.0);
        let f_reflected = f(reflected);
        if f_reflected < values[best] {
            let expanded = along(2.0);
            let f_expanded = f(expanded);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else if f_reflected < values[mid] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else {
            let contracted = if f_reflected < values[worst] {
                along(0.5)
            } else {
                along(-0.5)
            };
            let f_contracted = f(contracted);
            if f_contracted < values[worst].min(f_reflected) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                for index in [mid, worst] {
                    simplex[index] = [
                        simplex[best][0] + 0.5 * (simplex[index][0] - simplex[best][0]),
                        simplex[best][1] + 0.5 * (simplex[index][1] - simplex[best][1]),
                    ];
                    values[index] = f(simplex[index]);
                }
            }
        }
    }
    let mut order = [0, 1, 2];
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let z = simplex[order[0]];
    (z[0].exp(), z[1].exp())
}

#[test]
fn criterion_01_closed_form_mle_matches_derivative_free_maximization() {
    let clock = Instant::now();
    let bases = [(0.8, 0.6), (2.0, 5.0), (12.0, 1.5), (452.0, 2.8e5)];
    let mut worst = 0.0_f64;
    for rep in 0..100 {
        let (mu, lambda) = bases[rep % bases.len()];
        let params = IgParams::new(mu, lambda).unwrap();
        let mut rng = SplitMix64::split(2100, rep as u64);
        let sample = params.sample_with(&mut rng, 200);

        let closed = fit_mle(&sample).unwrap().params;
        let (mu_numeric, lambda_numeric) = numeric_mle(&sample);
        let mu_err = (closed.mu() - mu_numeric).abs() / closed.mu();
        let lambda_err = (closed.lambda() - lambda_numeric).abs() / closed.lambda();
        worst = worst.max(mu_err).max(lambda_err);
        assert!(
            mu_err < 1e-6 && lambda_err < 1e-6,
            "sample {rep}: relative gaps mu {mu_err:.2e}, lambda {lambda_err:.2e}"
        );
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:.2?}");
    println!("criterion 1 pass: worst relative gap {worst:.2e} in {elapsed:.2?}");
}

#[test]
fn criterion_02_hitting_times_follow_the_inverse_gaussian_law() {
    let clock = Instant::now();
    let params = DriftParams::new(1.0, 1.0, 1.0).unwrap();
    let sample = simulate_fpt(&params, 1e-4, 50.0, 50_000, 21, true).unwrap();
    assert_eq!(sample.censored, 0, "paths censored at the horizon");

    let mean = sample.hits.iter().sum::<f64>() / sample.hits.len() as f64;
    assert!((mean - 1.0).abs() < 0.01, "mean hitting time {mean}");

    let ks = empirical_vs_theoretical(&sample).unwrap();
    assert!(ks.statistic < 0.01, "distance to the hitting law {}", ks.statistic);

    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:.2?}");
    println!(
        "criterion 2 pass: mean {mean:.4}, distance {:.4} in {elapsed:.2?}",
        ks.statistic
    );
}

#[test]
fn criterion_03_exponential_martingale_has_unit_mean() {
    let clock = Instant::now();
    for (i, &a) in [0.25, 0.5, 1.0].iter().enumerate() {
        for (j, &t) in [0.5, 1.0, 4.0].iter().enumerate() {
            let seed = 900 + 3 * i as u64 + j as u64;
            let (mean, se) = martingale_check(a, t, 1_000_000, seed);
            assert!(
                (mean - 1.0).abs() <= 3.0 * se,
                "a = {a}, t = {t}: mean {mean} with se {se}"
            );
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:.2?}");
    println!("criterion 3 pass: 9 parameter pairs within 3 se in {elapsed:.2?}");
}

#[test]
fn criterion_04_analytic_information_matches_score_covariance() {
    let params = IgParams::new(2.0, 5.0).unwrap();
    let (mu, lambda) = (params.mu(), params.lambda());
    let analytic = fisher_information(&params);

    let mut rng = SplitMix64::new(104);
    let n = 1_000_000;
    let draws = params.sample_with(&mut rng, n);
    let scores: Vec<(f64, f64)> = draws
        .iter()
        .map(|&x| {
            (
                lambda * (x - mu) / (mu * mu * mu),
                1.0 / (2.0 * lambda) - (x - mu) * (x - mu) / (2.0 * mu * mu * x),
            )
        })
        .collect();
    let nn = n as f64;
    let mean1 = scores.iter().map(|s| s.0).sum::<f64>() / nn;
    let mean2 = scores.iter().map(|s| s.1).sum::<f64>() / nn;
    let mut c11 = 0.0;
    let mut c22 = 0.0;
    let mut c12 = 0.0;
    for &(u1, u2) in &scores {
        c11 += (u1 - mean1) * (u1 - mean1);
        c22 += (u2 - mean2) * (u2 - mean2);
        c12 += (u1 - mean1) * (u2 - mean2);
    }
    c11 /= nn;
    c22 /= nn;
    c12 /= nn;

    let rel11 = (c11 - analytic[0][0]).abs() / analytic[0][0];
    let rel22 = (c22 - analytic[1][1]).abs() / analytic[1][1];
    // The off-diagonal is exactly zero, so "2% entrywise" is read
    // against the scale sqrt(I11 I22) of the matrix.
    let off_scale = (analytic[0][0] * analytic[1][1]).sqrt();
    assert!(rel11 < 0.02, "I11: {c11} vs {}", analytic[0][0]);
    assert!(rel22 < 0.02, "I22: {c22} vs {}", analytic[1][1]);
    assert!(c12.abs() < 0.02 * off_scale, "I12: {c12}");
    println!(
        "criterion 4 pass: relative gaps {rel11:.4}, {rel22:.4}, cross term {c12:.2e}"
    );
}

#[test]
fn criterion_05_shape_bias_correction_centers_the_estimator() {
    let params = IgParams::new(1.0, 2.0).unwrap();
    let replicates = 2000;
    let mut corrected_sum = 0.0;
    let mut raw_sum = 0.0;
    for rep in 0..replicates {
        let mut rng = SplitMix64::split(9, rep);
        let sample = params.sample_with(&mut rng, 10);
        corrected_sum += bias_corrected_lambda(&sample, 3).unwrap();
        raw_sum += bias_corrected_lambda(&sample, 0).unwrap();
    }
    let corrected_mean = corrected_sum / replicates as f64;
    let raw_factor = raw_sum / replicates as f64 / 2.0;

    assert!(
        (corrected_mean - 2.0).abs() < 0.04,
        "corrected mean {corrected_mean}"
    );
    assert!(
        (raw_factor - 10.0 / 7.0).abs() < 0.05,
        "uncorrected inflation {raw_factor}"
    );
    println!(
        "criterion 5 pass: corrected mean {corrected_mean:.4}, inflation {raw_factor:.4}"
    );
}

#[test]
fn criterion_06_distribution_functions_are_mutually_consistent() {
    for (mu, lambda) in [(2.0, 3.0), (0.9, 0.4), (452.0, 2.8e5)] {
        let params = IgParams::new(mu, lambda).unwrap();
        for p in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let x = params.quantile(p).unwrap();

            let h = 1e-6 * x;
            let derivative =
                (params.cdf(x + h).unwrap() - params.cdf(x - h).unwrap()) / (2.0 * h);
            let density = params.pdf(x).unwrap();
            let fd_err = (derivative - density).abs() / density;
            assert!(fd_err < 1e-5, "({mu}, {lambda}) at {x}: fd gap {fd_err:.2e}");

            let roundtrip = params.quantile(params.cdf(x).unwrap()).unwrap();
            let rt_err = (roundtrip - x).abs() / x;
            assert!(rt_err < 1e-8, "({mu}, {lambda}) at {x}: roundtrip {rt_err:.2e}");
        }
    }

    let params = IgParams::new(2.0, 5.0).unwrap();
    let n = 100_000;
    let threshold = 1.63 / (n as f64).sqrt();
    let mut passes = 0;
    for seed in 0..10 {
        let sample = params.sample(n, 3100 + seed);
        let d = ks_statistic(&sample, |t| params.cdf(t).unwrap_or(0.0)).unwrap();
        if d < threshold {
            passes += 1;
        }
    }
    assert!(passes >= 9, "sampler agreed with the CDF in {passes}/10 seeds");
    println!("criterion 6 pass: sampler within {threshold:.4} in {passes}/10 seeds");
}

/// One standard-normal predictor, eta = b0 + b1 x, responses from
/// IG(exp(eta), lambda).
fn simulate_log_link(
    b0: f64,
    b1: f64,
    lambda: f64,
    n: usize,
    rng: &mut SplitMix64,
) -> (DMatrix<f64>, DVector<f64>) {
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        let x = rng.next_normal();
        let mu = (b0 + b1 * x).exp();
        xs.push(x);
        ys.push(IgParams::new(mu, lambda).unwrap().draw(rng));
    }
    (
        DMatrix::from_column_slice(n, 1, &xs),
        DVector::from_column_slice(&ys),
    )
}

#[test]
fn criterion_07_wald_intervals_cover_at_the_nominal_rate() {
    let clock = Instant::now();
    let z = norm_quantile(0.975);
    let spec = GlmSpec {
        link: Link::Log,
        ..GlmSpec::default()
    };
    let replicates = 500;
    let truth = [2.0, 0.3];
    let mut covered = [0usize; 2];
    for rep in 0..replicates {
        let mut rng = SplitMix64::split(515, rep);
        let (x, y) = simulate_log_link(truth[0], truth[1], 50.0, 5000, &mut rng);
        let fit = irls_fit(&x, &y, &spec).unwrap();
        for j in 0..2 {
            let se = fit.vcov[(j, j)].sqrt();
            if (fit.beta[j] - truth[j]).abs() <= z * se {
                covered[j] += 1;
            }
        }
    }
    for (j, &count) in covered.iter().enumerate() {
        let fraction = count as f64 / replicates as f64;
        assert!(
            fraction > 0.92 && fraction < 0.98,
            "coefficient {j}: coverage {count}/{replicates}"
        );
    }
    let elapsed = clock.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:.2?}");
    println!(
        "criterion 7 pass: coverage {}/{replicates} and {}/{replicates} in {elapsed:.2?}",
        covered[0], covered[1]
    );
}

#[test]
fn criterion_08_intercept_only_fit_reproduces_the_closed_form() {
    let params = IgParams::new(2.0, 5.0).unwrap();
    let sample = params.sample(300, 808);
    let y = DVector::from_column_slice(&sample);
    let x = DMatrix::<f64>::zeros(300, 0);

    let fit = irls_fit(&x, &y, &GlmSpec::default()).unwrap();
    let mle = fit_mle(&sample).unwrap();

    let mu_err = (fit.beta[0] - mle.params.mu()).abs() / mle.params.mu();
    assert!(mu_err < 1e-6, "mean gap {mu_err:.2e}");
    let loglik_gap = (fit.loglik - mle.loglik).abs();
    assert!(
        loglik_gap <= 1e-8 * mle.loglik.abs().max(1.0),
        "loglik {} vs {}",
        fit.loglik,
        mle.loglik
    );
    println!("criterion 8 pass: mean gap {mu_err:.2e}, loglik gap {loglik_gap:.2e}");
}

#[test]
fn criterion_09_full_dataset_reproduces_published_results() {
    let path = match std::env::var("CCPP_DATA") {
        Ok(path) => path,
        Err(_) => {
            println!(
                "criterion 9 skip: set CCPP_DATA to the plant dataset CSV to enable"
            );
            return;
        }
    };
    let table = load_csv(&path, &CcppSchema).unwrap();
    assert_eq!(table.n_rows(), 9568, "expected the full dataset");

    // (a) Correlation of each predictor with output.
    let rows = correlation_report(&table, "PE").unwrap();
    let r_of = |pair: &str| rows.iter().find(|r| r.pair == pair).unwrap().r;
    assert!((r_of("T-PE") - -0.948).abs() <= 0.01, "T: {}", r_of("T-PE"));
    assert!((r_of("V-PE") - -0.421).abs() <= 0.02, "V: {}", r_of("V-PE"));
    assert!((r_of("AP-PE") - 0.264).abs() <= 0.02, "AP: {}", r_of("AP-PE"));
    assert!((r_of("RH-PE") - 0.389).abs() <= 0.02, "RH: {}", r_of("RH-PE"));

    // (b) Distribution comparison on the output column. Fits anchor the
    // positive-support families at the origin (two-parameter fits).
    let pe = table.column("PE").unwrap().to_vec();
    let comparison = compare_distributions_with(&pe, FitConvention::ZeroLocation).unwrap();
    println!("criterion 9 note: distribution fits use the zero_location convention");
    let ks_of = |kind: ModelKind| {
        comparison
            .rows
            .iter()
            .find(|row| row.model.kind() == kind)
            .unwrap()
            .ks
            .statistic
    };
    let ig = ks_of(ModelKind::InverseGaussian);
    let normal = ks_of(ModelKind::Normal);
    let exponential = ks_of(ModelKind::Exponential);
    assert!((ig - 0.2291).abs() <= 0.03, "ig distance {ig}");
    assert!((normal - 0.0887).abs() <= 0.03, "normal distance {normal}");
    assert!(
        (exponential - 0.2217).abs() <= 0.03,
        "exponential distance {exponential}"
    );

    // (c) Five-fold cross-validation with the identity link. The
    // published error magnitudes are not exactly reproducible from the
    // outside, so the squared-error checks are properties: agreement
    // between train and test, and stability across partitions.
    let mut x = DMatrix::zeros(table.n_rows(), 4);
    for (j, name) in ["T", "V", "AP", "RH"].iter().enumerate() {
        for (i, &value) in table.column(name).unwrap().iter().enumerate() {
            x[(i, j)] = value;
        }
    }
    let y = DVector::from_column_slice(&pe);
    let spec = GlmSpec::default();
    let mut test_mses = Vec::new();
    for seed in 0..5 {
        let config = CvConfig {
            folds: 5,
            seed,
            shuffle: true,
        };
        let report = k_fold_cv(&x, &y, &spec, &config).unwrap();
        assert!(report.test.r2 >= 0.92, "seed {seed}: test r2 {}", report.test.r2);
        assert!(report.train.mse.is_finite() && report.test.mse.is_finite());
        let ratio = report.test.mse / report.train.mse;
        assert!(
            (ratio - 1.0).abs() <= 0.15,
            "seed {seed}: test/train mse ratio {ratio}"
        );
        test_mses.push(report.test.mse);
    }
    let mse_mean = test_mses.iter().sum::<f64>() / test_mses.len() as f64;
    for (seed, mse) in test_mses.iter().enumerate() {
        assert!(
            (mse - mse_mean).abs() <= 0.05 * mse_mean,
            "seed {seed}: test mse {mse} strays from mean {mse_mean}"
        );
    }
    println!(
        "criterion 9 pass: r(T) {:.3}, ig distance {ig:.4}, mean test mse {mse_mean:.2}",
        r_of("T-PE")
    );
}

fn run_binary(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_ig"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "{args:?} failed");
    output.stdout
}

fn strip_timestamp(text: &[u8]) -> String {
    String::from_utf8(text.to_vec())
        .unwrap()
        .lines()
        .filter(|line| !line.contains("\"timestamp\":"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_10_cli_runs_are_byte_identical_under_a_fixed_seed() {
    let cv_args = ["cv", FIXTURE, "--seed", "42", "--quiet"];
    let first = run_binary(&cv_args);
    let second = run_binary(&cv_args);
    assert_eq!(strip_timestamp(&first), strip_timestamp(&second));

    let sim_args = [
        "simulate", "--drift", "1", "--dt", "0.01", "--paths", "2000", "--seed", "7",
        "--quiet",
    ];
    let first = run_binary(&sim_args);
    let second = run_binary(&sim_args);
    assert_eq!(strip_timestamp(&first), strip_timestamp(&second));
    println!("criterion 10 pass: repeated runs byte-identical outside the timestamp");
}
