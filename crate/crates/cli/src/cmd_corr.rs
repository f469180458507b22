//! `ig corr`: correlation of every column with the target.

use serde::Serialize;

use ig_cli::report::Num;
use ig_diagnostics::correlation_report;

use crate::args::{Cli, CorrArgs};
use crate::emit::emit;
use crate::failure::Failure;
use crate::table::{file_digest, load_table};

#[derive(Serialize)]
struct CorrPayload {
    target: String,
    rows: Vec<CorrRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<Vec<CorrReference>>,
}

#[derive(Serialize)]
struct CorrRow {
    pair: String,
    n: usize,
    r: Num,
    t_statistic: Num,
    p_value: Num,
    ci_low: Num,
    ci_high: Num,
}

#[derive(Serialize)]
struct CorrReference {
    pair: String,
    r_published: Num,
    r_observed: Num,
    deviation: Num,
    t_published: Num,
}

pub fn run(cli: &Cli, args: &CorrArgs) -> Result<(), Failure> {
    let digest = file_digest(&args.csv)?;
    let table = load_table(&args.csv)?;
    let rows = correlation_report(&table, &args.target)?;

    let reference = cli.reference.then(|| {
        rows.iter()
            .filter_map(|row| {
                published(&row.pair).map(|(r, t)| CorrReference {
                    pair: row.pair.clone(),
                    r_published: Num(r),
                    r_observed: Num(row.r),
                    deviation: Num(row.r - r),
                    t_published: Num(t),
                })
            })
            .collect()
    });

    let payload = CorrPayload {
        target: args.target.clone(),
        rows: rows
            .into_iter()
            .map(|row| CorrRow {
                pair: row.pair,
                n: row.n,
                r: Num(row.r),
                t_statistic: Num(row.t_statistic),
                p_value: Num(row.p_value),
                ci_low: Num(row.ci_low),
                ci_high: Num(row.ci_high),
            })
            .collect(),
        reference,
    };
    emit(cli, Some(digest), None, payload)
}

/// Published (r, t) for the full plant dataset's predictor-target pairs.
fn published(pair: &str) -> Option<(f64, f64)> {
    match pair {
        "T-PE" => Some((-0.948, -294.32)),
        "V-PE" => Some((-0.421, -45.23)),
        "AP-PE" => Some((0.264, 26.72)),
        "RH-PE" => Some((0.389, 41.24)),
        _ => None,
    }
}
