//! Report emission: envelope assembly and output routing.

use std::fs;

use serde::Serialize;

use ig_cli::report::{to_report_string, ReportEnvelope, SCHEMA_VERSION};

use crate::args::Cli;
use crate::failure::Failure;

/// Wraps `payload` in the envelope and writes it to `--out` or stdout.
pub fn emit<P: Serialize>(
    cli: &Cli,
    input_digest: Option<String>,
    seed: Option<u64>,
    payload: P,
) -> Result<(), Failure> {
    let envelope = ReportEnvelope {
        command: cli.command.name(),
        schema_version: SCHEMA_VERSION,
        input_digest,
        seed,
        timestamp: chrono::Utc::now().to_rfc3339(),
        payload,
    };
    let text = to_report_string(&envelope);
    match &cli.out {
        Some(path) => {
            fs::write(path, &text)?;
            if !cli.quiet {
                eprintln!("wrote {}", path.display());
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}
