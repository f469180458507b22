//! `ig simulate`: barrier hitting times and their implied law.

use serde::Serialize;

use ig_cli::report::Num;
use ig_fpt::{
    default_horizon, empirical_vs_theoretical, fpt_to_ig_params, simulate_fpt, DriftParams,
};
use ig_inference::KsMethod;

use crate::args::{Cli, SimulateArgs};
use crate::emit::emit;
use crate::failure::Failure;

#[derive(Serialize)]
struct SimulatePayload {
    drift: Num,
    sigma: Num,
    barrier: Num,
    dt: Num,
    max_time: Num,
    paths: usize,
    bridge: bool,
    /// Hitting-law parameters; absent when the drift is not positive.
    implied: Option<ImpliedParams>,
    hits: HitSummary,
    censored: usize,
    /// Fit of the hits against the implied law; absent when any path
    /// was censored or no law is implied.
    ks: Option<KsOut>,
}

#[derive(Serialize)]
struct ImpliedParams {
    mu: Num,
    lambda: Num,
}

#[derive(Serialize)]
struct HitSummary {
    count: usize,
    mean: Option<Num>,
    variance: Option<Num>,
    min: Option<Num>,
    max: Option<Num>,
}

#[derive(Serialize)]
struct KsOut {
    statistic: Num,
    p_value: Num,
    method: &'static str,
}

pub fn run(cli: &Cli, args: &SimulateArgs) -> Result<(), Failure> {
    let params = DriftParams::new(args.drift, args.sigma, args.barrier)?;
    let max_time = match args.max_time {
        Some(horizon) => horizon,
        None => default_horizon(&params).map_err(|_| {
            Failure::input(
                "max_time_required",
                "--max-time is required when the drift is not positive",
            )
        })?,
    };

    let sample = simulate_fpt(
        &params,
        args.dt,
        max_time,
        args.paths,
        cli.seed,
        !args.no_bridge,
    )?;

    if let Some(path) = &args.emit_hits {
        let mut out = String::from("hit_time\n");
        for &hit in &sample.hits {
            out.push_str(&format!("{hit}\n"));
        }
        std::fs::write(path, out)?;
        if !cli.quiet {
            eprintln!("wrote {}", path.display());
        }
    }

    let implied = fpt_to_ig_params(&params).ok().map(|ig| ImpliedParams {
        mu: Num(ig.mu()),
        lambda: Num(ig.lambda()),
    });
    let ks = if sample.censored == 0 && implied.is_some() {
        let result = empirical_vs_theoretical(&sample)?;
        Some(KsOut {
            statistic: Num(result.statistic),
            p_value: Num(result.p_value),
            method: match result.method {
                KsMethod::AsymptoticNaive => "asymptotic_naive",
                KsMethod::ParametricBootstrap => "parametric_bootstrap",
            },
        })
    } else {
        None
    };

    let payload = SimulatePayload {
        drift: Num(args.drift),
        sigma: Num(args.sigma),
        barrier: Num(args.barrier),
        dt: Num(args.dt),
        max_time: Num(max_time),
        paths: args.paths,
        bridge: !args.no_bridge,
        implied,
        hits: summarize(&sample.hits),
        censored: sample.censored,
        ks,
    };
    emit(cli, None, Some(cli.seed), payload)
}

fn summarize(hits: &[f64]) -> HitSummary {
    let count = hits.len();
    if count == 0 {
        return HitSummary {
            count,
            mean: None,
            variance: None,
            min: None,
            max: None,
        };
    }
    let mean = hits.iter().sum::<f64>() / count as f64;
    let variance = (count >= 2).then(|| {
        Num(hits.iter().map(|&h| (h - mean) * (h - mean)).sum::<f64>() / (count - 1) as f64)
    });
    let min = hits.iter().copied().fold(f64::INFINITY, f64::min);
    let max = hits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    HitSummary {
        count,
        mean: Some(Num(mean)),
        variance,
        min: Some(Num(min)),
        max: Some(Num(max)),
    }
}
