use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Inverse Gaussian modeling toolkit for power plant output data.
#[derive(Debug, Parser)]
#[command(name = "ig", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for every randomized step; fixed seed means identical output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Suppress status lines on standard error.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Annotate the payload with published reference values and the
    /// deviation of this run from them.
    #[arg(long, global = true)]
    pub reference: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit candidate distributions to one column and compare their fit.
    Fit(FitArgs),
    /// Fit the inverse Gaussian regression and report coefficients.
    Glm(GlmArgs),
    /// Cross-validate the regression out of sample.
    Cv(CvArgs),
    /// Correlate each predictor with the target column.
    Corr(CorrArgs),
    /// Simulate barrier hitting times of drifted Brownian motion.
    Simulate(SimulateArgs),
}

impl Command {
    /// Name stamped into the report envelope.
    pub fn name(&self) -> &'static str {
        match self {
            Command::Fit(_) => "fit",
            Command::Glm(_) => "glm",
            Command::Cv(_) => "cv",
            Command::Corr(_) => "corr",
            Command::Simulate(_) => "simulate",
        }
    }
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// CSV file with a header row.
    pub csv: PathBuf,

    /// Column holding the sample to fit.
    #[arg(long, default_value = "PE")]
    pub column: String,

    /// Comma-separated subset of ig, normal, exponential.
    #[arg(long, value_delimiter = ',', default_value = "ig,normal,exponential")]
    pub models: Vec<String>,

    /// Estimate a location shift for the positive-support families
    /// instead of anchoring them at the origin.
    #[arg(long)]
    pub shifted: bool,

    /// Write histogram and fitted-density plot data (series,x,y) here.
    #[arg(long)]
    pub density: Option<PathBuf>,

    /// Histogram bin count for --density.
    #[arg(long, default_value_t = 50)]
    pub bins: usize,
}

#[derive(Debug, Args)]
pub struct GlmArgs {
    /// CSV file with a header row.
    pub csv: PathBuf,

    /// Response column.
    #[arg(long, default_value = "PE")]
    pub response: String,

    /// Comma-separated predictor columns.
    #[arg(long, value_delimiter = ',', default_value = "T,V,AP,RH")]
    pub predictors: Vec<String>,

    #[arg(long, value_enum, default_value_t = LinkArg::Identity)]
    pub link: LinkArg,

    /// Drop the intercept column.
    #[arg(long)]
    pub no_intercept: bool,

    #[arg(long, default_value_t = 100)]
    pub max_iterations: usize,

    /// Relative deviance change that stops the iteration.
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,

    /// Include residual, leverage, and Q-Q series in the report; with
    /// --out, also write them as CSV files next to it.
    #[arg(long)]
    pub diagnostics: bool,
}

#[derive(Debug, Args)]
pub struct CvArgs {
    /// CSV file with a header row.
    pub csv: PathBuf,

    /// Response column.
    #[arg(long, default_value = "PE")]
    pub response: String,

    /// Comma-separated predictor columns.
    #[arg(long, value_delimiter = ',', default_value = "T,V,AP,RH")]
    pub predictors: Vec<String>,

    #[arg(long, value_enum, default_value_t = LinkArg::Identity)]
    pub link: LinkArg,

    /// Drop the intercept column.
    #[arg(long)]
    pub no_intercept: bool,

    #[arg(long, default_value_t = 5)]
    pub folds: usize,

    /// Deal rows into folds in file order instead of shuffling.
    #[arg(long)]
    pub no_shuffle: bool,
}

#[derive(Debug, Args)]
pub struct CorrArgs {
    /// CSV file with a header row.
    pub csv: PathBuf,

    /// Column every other column is correlated against.
    #[arg(long, default_value = "PE")]
    pub target: String,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Drift of the underlying Brownian motion.
    #[arg(long, allow_hyphen_values = true)]
    pub drift: f64,

    /// Diffusion coefficient.
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,

    /// Absorbing barrier level above the origin.
    #[arg(long, default_value_t = 1.0)]
    pub barrier: f64,

    /// Euler time step.
    #[arg(long, default_value_t = 1e-3)]
    pub dt: f64,

    #[arg(long, default_value_t = 10_000)]
    pub paths: usize,

    /// Simulation horizon; defaults to the 1 - 1e-6 quantile of the
    /// hitting law when the drift is positive, and is required
    /// otherwise.
    #[arg(long)]
    pub max_time: Option<f64>,

    /// Record crossings only at grid points, skipping the Brownian
    /// bridge correction for crossings inside a step.
    #[arg(long)]
    pub no_bridge: bool,

    /// Write the raw hitting times (one per line) to this CSV file.
    #[arg(long)]
    pub emit_hits: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LinkArg {
    Identity,
    Log,
    InverseSquared,
}

impl From<LinkArg> for ig_glm::Link {
    fn from(value: LinkArg) -> Self {
        match value {
            LinkArg::Identity => ig_glm::Link::Identity,
            LinkArg::Log => ig_glm::Link::Log,
            LinkArg::InverseSquared => ig_glm::Link::InverseSquared,
        }
    }
}
