//! Entry point of the `ig` binary.
//!
//! Every command prints one JSON report to standard output (or `--out`)
//! and exits 0; failures print an error report instead and exit 2 for
//! unusable input or 3 for numerical breakdown on valid input.

mod args;
mod cmd_corr;
mod cmd_cv;
mod cmd_fit;
mod cmd_glm;
mod cmd_simulate;
mod emit;
mod failure;
mod table;

use clap::Parser;

use ig_cli::report::{to_report_string, ErrorEnvelope, SCHEMA_VERSION};

use args::{Cli, Command};
use failure::Failure;

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = dispatch(&cli) {
        let envelope = ErrorEnvelope {
            command: cli.command.name(),
            schema_version: SCHEMA_VERSION,
            error: failure.body(),
        };
        print!("{}", to_report_string(&envelope));
        if !cli.quiet {
            eprintln!("error: {}", failure.message);
        }
        std::process::exit(failure.exit_code);
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Fit(args) => cmd_fit::run(cli, args),
        Command::Glm(args) => cmd_glm::run(cli, args),
        Command::Cv(args) => cmd_cv::run(cli, args),
        Command::Corr(args) => cmd_corr::run(cli, args),
        Command::Simulate(args) => cmd_simulate::run(cli, args),
    }
}
