//! `ig fit`: distribution comparison on one column.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use ig_cli::report::Num;
use ig_diagnostics::density_overlay;
use ig_inference::{
    compare_distributions_with, ComparisonRow, DistributionComparison, FitConvention,
    FittedDistribution, KsMethod, ModelKind,
};

use crate::args::{Cli, FitArgs};
use crate::emit::emit;
use crate::failure::Failure;
use crate::table::{file_digest, load_table};

#[derive(Serialize)]
struct FitPayload {
    column: String,
    n: usize,
    convention: &'static str,
    rows: Vec<FitRow>,
    best_by_aic: &'static str,
    best_by_ks: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<Vec<FitReference>>,
}

#[derive(Serialize)]
struct FitRow {
    model: &'static str,
    params: BTreeMap<&'static str, Num>,
    ks_statistic: Num,
    ks_p_value: Num,
    ks_method: &'static str,
    loglik: Num,
    n_params: usize,
    aic: Num,
}

#[derive(Serialize)]
struct FitReference {
    model: &'static str,
    ks_published: Num,
    ks_observed: Num,
    deviation: Num,
}

pub fn run(cli: &Cli, args: &FitArgs) -> Result<(), Failure> {
    let digest = file_digest(&args.csv)?;
    let table = load_table(&args.csv)?;
    let sample = table.column(&args.column)?.to_vec();

    if args.bins == 0 {
        return Err(Failure::input("invalid_bins", "--bins must be at least 1"));
    }
    let kinds = parse_models(&args.models)?;
    let convention = if args.shifted {
        FitConvention::Shifted
    } else {
        FitConvention::ZeroLocation
    };

    let mut comparison = compare_distributions_with(&sample, convention)?;
    comparison.rows.retain(|row| kinds.contains(&row.model.kind()));

    if let Some(path) = &args.density {
        write_density(path, &sample, &comparison, args.bins)?;
        if !cli.quiet {
            eprintln!("wrote {}", path.display());
        }
    }

    let reference = cli.reference.then(|| {
        comparison
            .rows
            .iter()
            .map(|row| {
                let published = published_ks(row.model.kind());
                FitReference {
                    model: row.model.kind().label(),
                    ks_published: Num(published),
                    ks_observed: Num(row.ks.statistic),
                    deviation: Num(row.ks.statistic - published),
                }
            })
            .collect()
    });

    let payload = FitPayload {
        column: args.column.clone(),
        n: sample.len(),
        convention: match convention {
            FitConvention::ZeroLocation => "zero_location",
            FitConvention::Shifted => "shifted",
        },
        rows: comparison.rows.iter().map(fit_row).collect(),
        best_by_aic: comparison.best_by_aic().model.kind().label(),
        best_by_ks: comparison.best_by_ks().model.kind().label(),
        reference,
    };
    emit(cli, Some(digest), None, payload)
}

fn parse_models(tokens: &[String]) -> Result<Vec<ModelKind>, Failure> {
    let mut kinds = Vec::new();
    for token in tokens {
        let kind = match token.as_str() {
            "ig" => ModelKind::InverseGaussian,
            "normal" => ModelKind::Normal,
            "exponential" => ModelKind::Exponential,
            other => {
                return Err(Failure::input(
                    "unknown_model",
                    format!("unknown model {other:?}; choose from ig, normal, exponential"),
                ))
            }
        };
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn fit_row(row: &ComparisonRow) -> FitRow {
    FitRow {
        model: row.model.kind().label(),
        params: params_map(&row.model),
        ks_statistic: Num(row.ks.statistic),
        ks_p_value: Num(row.ks.p_value),
        ks_method: match row.ks.method {
            KsMethod::AsymptoticNaive => "asymptotic_naive",
            KsMethod::ParametricBootstrap => "parametric_bootstrap",
        },
        loglik: Num(row.loglik),
        n_params: row.n_params,
        aic: Num(row.aic),
    }
}

fn params_map(model: &FittedDistribution) -> BTreeMap<&'static str, Num> {
    match *model {
        FittedDistribution::InverseGaussian { loc, params } => BTreeMap::from([
            ("loc", Num(loc)),
            ("mu", Num(params.mu())),
            ("lambda", Num(params.lambda())),
        ]),
        FittedDistribution::Normal { mean, sd } => {
            BTreeMap::from([("mean", Num(mean)), ("sd", Num(sd))])
        }
        FittedDistribution::Exponential { loc, rate } => {
            BTreeMap::from([("loc", Num(loc)), ("rate", Num(rate))])
        }
    }
}

/// Kolmogorov-Smirnov statistics published for the full plant dataset;
/// deviations are only meaningful when running against it.
fn published_ks(kind: ModelKind) -> f64 {
    match kind {
        ModelKind::InverseGaussian => 0.2291,
        ModelKind::Normal => 0.0887,
        ModelKind::Exponential => 0.2217,
    }
}

/// Long-format plot data: histogram bars as bin centers, one series per
/// fitted density on its 200-point grid.
fn write_density(
    path: &Path,
    sample: &[f64],
    comparison: &DistributionComparison,
    bins: usize,
) -> Result<(), Failure> {
    let overlay = density_overlay(sample, comparison, bins);
    let mut out = String::from("series,x,y\n");
    for (i, &density) in overlay.densities.iter().enumerate() {
        let center = 0.5 * (overlay.bin_edges[i] + overlay.bin_edges[i + 1]);
        out.push_str(&format!("histogram,{center},{density}\n"));
    }
    for curve in &overlay.curves {
        for (&x, &y) in curve.xs.iter().zip(&curve.ys) {
            out.push_str(&format!("{},{x},{y}\n", curve.label));
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}
