use ig_fpt::{
    empirical_vs_theoretical, fpt_to_ig_params, martingale_check, simulate_fpt, DriftParams,
};

fn unit_setup() -> DriftParams {
    DriftParams::new(1.0, 1.0, 1.0).unwrap()
}

#[test]
fn bridge_corrected_hits_follow_the_closed_form_law() {
    let p = unit_setup();
    let s = simulate_fpt(&p, 1e-4, 50.0, 50_000, 21, true).unwrap();
    assert_eq!(s.censored, 0);
    let n = s.hits.len() as f64;
    let mean = s.hits.iter().sum::<f64>() / n;
    let var = s.hits.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / (n - 1.0);
    let ig = fpt_to_ig_params(&p).unwrap();
    // Monte Carlo standard errors at n = 5e4: 0.0045 for the mean
    // (sd = 1), 0.0184 for the variance (fourth central moment 18).
    assert!((mean - ig.mean()).abs() < 0.01, "mean {mean}");
    assert!((var - ig.variance()).abs() < 0.055, "variance {var}");
    let ks = empirical_vs_theoretical(&s).unwrap();
    assert!(ks.statistic < 0.01, "ks {}", ks.statistic);
}

#[test]
fn plain_euler_at_the_fine_step_stays_within_the_loose_cap() {
    let p = unit_setup();
    let s = simulate_fpt(&p, 1e-4, 50.0, 50_000, 22, false).unwrap();
    assert_eq!(s.censored, 0);
    let ks = empirical_vs_theoretical(&s).unwrap();
    assert!(ks.statistic < 0.02, "ks {}", ks.statistic);
}

#[test]
fn the_bridge_correction_beats_plain_euler_where_bias_is_visible() {
    // At dt = 1e-3 the discretization bias in the plain scheme
    // (about 0.58 sigma sqrt(dt) of barrier overshoot per crossing)
    // dominates sampling noise, so the ordering is decisive; at the
    // fine step the two are statistically indistinguishable.
    let p = unit_setup();
    let crude = simulate_fpt(&p, 1e-3, 50.0, 50_000, 23, false).unwrap();
    let bridged = simulate_fpt(&p, 1e-3, 50.0, 50_000, 23, true).unwrap();
    assert_eq!((crude.censored, bridged.censored), (0, 0));
    let ks_crude = empirical_vs_theoretical(&crude).unwrap().statistic;
    let ks_bridged = empirical_vs_theoretical(&bridged).unwrap().statistic;
    assert!(
        ks_crude > ks_bridged,
        "crude {ks_crude} vs bridged {ks_bridged}"
    );
    let mean = |s: &ig_fpt::FptSample| s.hits.iter().sum::<f64>() / s.hits.len() as f64;
    assert!(mean(&crude) > mean(&bridged));
}

#[test]
fn halving_the_step_does_not_worsen_the_fit() {
    let p = unit_setup();
    let base = simulate_fpt(&p, 1e-4, 50.0, 20_000, 24, true).unwrap();
    let half = simulate_fpt(&p, 5e-5, 50.0, 20_000, 24, true).unwrap();
    let ks_base = empirical_vs_theoretical(&base).unwrap().statistic;
    let ks_half = empirical_vs_theoretical(&half).unwrap().statistic;
    // Both sit at the sampling-noise floor (about 1.36 / sqrt(n) at
    // the 95th percentile), so the halved run may only exceed the
    // base one by noise.
    assert!(
        ks_half <= ks_base + 0.015,
        "base {ks_base} vs half {ks_half}"
    );
    assert!(ks_half < 0.02 && ks_base < 0.02);
}

#[test]
fn the_exponential_martingale_has_unit_mean() {
    let (estimate, std_error) = martingale_check(0.5, 1.0, 1_000_000, 25);
    assert!(std_error > 0.0);
    assert!(
        (estimate - 1.0).abs() <= 3.0 * std_error,
        "estimate {estimate} se {std_error}"
    );
    let (heavy, heavy_se) = martingale_check(1.0, 4.0, 1_000_000, 26);
    assert!(
        (heavy - 1.0).abs() <= 3.0 * heavy_se,
        "estimate {heavy} se {heavy_se}"
    );
    // The exponent a^2 t grows from 0.25 to 4, so the integrand's
    // spread and with it the standard error must grow too.
    assert!(heavy_se > std_error);
}

#[test]
fn the_martingale_identity_holds_across_the_parameter_grid() {
    for (i, &a) in [0.25, 0.5, 1.0].iter().enumerate() {
        for (j, &t) in [0.5, 1.0, 4.0].iter().enumerate() {
            let seed = 900 + (3 * i + j) as u64;
            let (estimate, std_error) = martingale_check(a, t, 1_000_000, seed);
            assert!(
                (estimate - 1.0).abs() <= 3.0 * std_error,
                "a {a} t {t}: estimate {estimate} se {std_error}"
            );
        }
    }
}
