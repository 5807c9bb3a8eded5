//! `srgm`: trend tests, swarm-optimized Goel-Okumoto fits, k-fold
//! cross-validation, and a one-shot reproduction report.
//!
//! Exit codes: 0 success (or growth verdict), 2 usage or input error,
//! 3 no-growth verdict from `trend`, 4 runtime failure (degenerate folds,
//! optimizer failure, missed reproduction bands).

mod common;
mod config;
mod cv;
mod fit;
mod refs;
mod reproduce;
mod trend;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "srgm",
    version,
    about = "Goel-Okumoto reliability model toolkit: trend tests, swarm fits, cross-validation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Laplace and arithmetic-average trend tests over the daily timeline
    Trend(CommonArgs),
    /// Fit the model per (algorithm, seed); emit fit, convergence, and fitted-curve series
    Fit(CommonArgs),
    /// k-fold cross-validation, one report row per algorithm
    Cv(CommonArgs),
    /// Full pipeline over both builtin datasets, checked against the published reference results
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Builtin dataset id (apache-2.0.36, apache-2.0.39) or path to a CSV file with header t,y
    #[arg(long)]
    pub dataset: Option<String>,

    /// Algorithm to run, repeatable: fa, sso, abc, gwo, pso, mfo, woa, oracle (default: all)
    #[arg(long = "algo", value_name = "ID")]
    pub algo: Vec<String>,

    /// Swarm population size (default 50)
    #[arg(long)]
    pub pop: Option<usize>,

    /// Iteration budget per run (default 100)
    #[arg(long)]
    pub iters: Option<usize>,

    /// Single RNG seed (default 42; SRGM_SEED env var is consulted before the default)
    #[arg(long, conflicts_with = "seeds")]
    pub seed: Option<u64>,

    /// Several seeds: comma-separated values or an inclusive range lo..hi
    #[arg(long)]
    pub seeds: Option<String>,

    /// Search box a_lo,a_hi,b_lo,b_hi, or auto for a in [y_n, 10 y_n], b in [1e-4, 1]
    #[arg(long)]
    pub bounds: Option<String>,

    /// Fold count for cv, repeatable (default 10 and 2)
    #[arg(long)]
    pub k: Vec<usize>,

    /// Output directory (default .)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads for concurrent (algorithm, seed) runs (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// key=value config file; explicit flags override its values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ReproduceArgs {
    /// Swarm population size (default 50)
    #[arg(long)]
    pub pop: Option<usize>,

    /// Iteration budget per run (default 100)
    #[arg(long)]
    pub iters: Option<usize>,

    /// Single RNG seed for the fit matrix
    #[arg(long, conflicts_with = "seeds")]
    pub seed: Option<u64>,

    /// Fit-matrix seeds: comma-separated values or an inclusive range lo..hi (default 1..20)
    #[arg(long)]
    pub seeds: Option<String>,

    /// Output directory (default .)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads for concurrent runs (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// key=value config file; explicit flags override its values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Error carrying the process exit code it maps to.
#[derive(Debug)]
pub struct Exit {
    pub code: i32,
    pub msg: String,
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Exit {}

pub fn exit_err(code: i32, msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Exit {
        code,
        msg: msg.into(),
    })
}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    exit_err(2, msg)
}

/// Degenerate data is a runtime failure (4); everything else is bad input (2).
pub fn core_err(e: srgm_core::Error) -> anyhow::Error {
    let code = match &e {
        srgm_core::Error::Degenerate(_) => 4,
        _ => 2,
    };
    exit_err(code, e.to_string())
}

fn main() {
    let code = match run() {
        Ok(code) => code,
        Err(e) => {
            let (code, msg) = match e.downcast_ref::<Exit>() {
                Some(x) => (x.code, x.msg.clone()),
                None => (2, format!("{e:#}")),
            };
            eprintln!("error: {msg}");
            code
        }
    };
    std::process::exit(code);
}

fn run() -> anyhow::Result<i32> {
    match Cli::parse().cmd {
        Cmd::Trend(a) => trend::cmd_trend(&config::RunConfig::resolve(&a)?),
        Cmd::Fit(a) => fit::cmd_fit(&config::RunConfig::resolve(&a)?),
        Cmd::Cv(a) => cv::cmd_cv(&config::RunConfig::resolve(&a)?),
        Cmd::Reproduce(a) => reproduce::cmd_reproduce(&a),
    }
}
