//! `ig glm`: regression fit with optional diagnostic series.

use std::path::Path;

use serde::Serialize;

use ig_cli::report::{num_pairs, nums, Num};
use ig_diagnostics::{diagnostic_bundle, DiagnosticBundle};
use ig_glm::{information_criteria, irls_fit, GlmSpec};

use crate::args::{Cli, GlmArgs};
use crate::emit::emit;
use crate::failure::Failure;
use crate::table::{design, file_digest, load_table, response};

#[derive(Serialize)]
struct GlmPayload {
    response: String,
    predictors: Vec<String>,
    link: &'static str,
    intercept: bool,
    n: usize,
    p: usize,
    coefficients: Vec<Coefficient>,
    dispersion: Num,
    deviance: Num,
    loglik: Num,
    aic: Num,
    bic: Num,
    iterations: usize,
    converged: bool,
    /// Deviance after each accepted iteration.
    trace: Vec<Num>,
    all_fitted_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostics: Option<DiagnosticsSeries>,
}

#[derive(Serialize)]
struct Coefficient {
    name: String,
    estimate: Num,
    std_error: Num,
}

#[derive(Serialize)]
struct DiagnosticsSeries {
    residual_vs_fitted: Vec<(Num, Num)>,
    scale_location: Vec<(Num, Num)>,
    cooks: Vec<(usize, Num)>,
    qq_anscombe: Vec<(Num, Num)>,
    band: (Num, Num),
}

impl From<DiagnosticBundle> for DiagnosticsSeries {
    fn from(bundle: DiagnosticBundle) -> Self {
        DiagnosticsSeries {
            residual_vs_fitted: num_pairs(&bundle.residual_vs_fitted),
            scale_location: num_pairs(&bundle.scale_location),
            cooks: bundle.cooks.iter().map(|&(i, d)| (i, Num(d))).collect(),
            qq_anscombe: num_pairs(&bundle.qq_anscombe),
            band: (Num(bundle.band.0), Num(bundle.band.1)),
        }
    }
}

pub fn run(cli: &Cli, args: &GlmArgs) -> Result<(), Failure> {
    let digest = file_digest(&args.csv)?;
    let table = load_table(&args.csv)?;
    let x = design(&table, &args.predictors)?;
    let y = response(&table, &args.response)?;
    let spec = GlmSpec {
        link: args.link.into(),
        max_iterations: args.max_iterations,
        tolerance: args.tolerance,
        intercept: !args.no_intercept,
    };
    let fit = irls_fit(&x, &y, &spec)?;
    let (aic, bic) = information_criteria(&fit);

    let names = coefficient_names(&args.predictors, spec.intercept);
    let coefficients = names
        .into_iter()
        .enumerate()
        .map(|(j, name)| Coefficient {
            name,
            estimate: Num(fit.beta[j]),
            std_error: Num(fit.vcov[(j, j)].sqrt()),
        })
        .collect();

    let diagnostics = if args.diagnostics {
        let bundle = diagnostic_bundle(&fit, &x, &y)?;
        if let Some(out) = &cli.out {
            write_plot_csvs(out, &bundle, cli.quiet)?;
        }
        Some(DiagnosticsSeries::from(bundle))
    } else {
        None
    };

    let payload = GlmPayload {
        response: args.response.clone(),
        predictors: args.predictors.clone(),
        link: fit.spec.link.label(),
        intercept: fit.spec.intercept,
        n: fit.n,
        p: fit.p,
        coefficients,
        dispersion: Num(fit.dispersion),
        deviance: Num(fit.deviance),
        loglik: Num(fit.loglik),
        aic: Num(aic),
        bic: Num(bic),
        iterations: fit.iterations,
        converged: fit.converged,
        trace: nums(&fit.trace),
        all_fitted_positive: fit.fitted.iter().all(|&m| m > 0.0),
        diagnostics,
    };
    emit(cli, Some(digest), None, payload)
}

fn coefficient_names(predictors: &[String], intercept: bool) -> Vec<String> {
    let mut names = Vec::with_capacity(predictors.len() + usize::from(intercept));
    if intercept {
        names.push("intercept".to_string());
    }
    names.extend(predictors.iter().cloned());
    names
}

/// One CSV per diagnostic panel, named after the report file's stem.
fn write_plot_csvs(out: &Path, bundle: &DiagnosticBundle, quiet: bool) -> Result<(), Failure> {
    let stem = out.with_extension("");
    let stem = stem.to_string_lossy();

    let mut pairs = String::from("fitted,pearson_residual\n");
    for &(fitted, residual) in &bundle.residual_vs_fitted {
        pairs.push_str(&format!("{fitted},{residual}\n"));
    }
    let mut scale = String::from("fitted,sqrt_abs_standardized_residual\n");
    for &(fitted, ordinate) in &bundle.scale_location {
        scale.push_str(&format!("{fitted},{ordinate}\n"));
    }
    let mut cooks = String::from("index,cooks_distance\n");
    for &(index, distance) in &bundle.cooks {
        cooks.push_str(&format!("{index},{distance}\n"));
    }
    let mut qq = String::from("theoretical_quantile,anscombe_residual\n");
    for &(theoretical, observed) in &bundle.qq_anscombe {
        qq.push_str(&format!("{theoretical},{observed}\n"));
    }

    for (suffix, content) in [
        ("residual_vs_fitted", pairs),
        ("scale_location", scale),
        ("cooks", cooks),
        ("qq_anscombe", qq),
    ] {
        let path = format!("{stem}_{suffix}.csv");
        std::fs::write(&path, content)?;
        if !quiet {
            eprintln!("wrote {path}");
        }
    }
    Ok(())
}
