//! `catalyst`: command-line front end for LOCC convertibility checks,
//! catalyst search and the reproduction experiments.
//!
//! Exit status: 0 feasible (or success), 1 infeasible, 2 error.

mod commands;
mod error;
mod manifest;
mod state;

use std::path::PathBuf;
use std::process::ExitCode;

use catalyst_core::Tolerance;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "catalyst",
    version,
    about = "Entanglement transformations and catalysts"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Slack allowed in each partial-sum comparison.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_major: f64,
    /// Allowed deviation of a coefficient sum from 1.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_norm: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for output files and manifests.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; changes speed only, never results.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

impl GlobalArgs {
    pub fn tolerance(&self) -> Result<Tolerance, CliError> {
        let base = Tolerance::default();
        Ok(Tolerance::new(
            self.tol_major,
            self.tol_norm,
            base.eps_entropy,
        )?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    General,
    Standard,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether PSI converts to PHI under LOCC.
    Check { psi: PathBuf, phi: PathBuf },
    /// Test a catalyst file or search for a k x k catalyst.
    Catalyze {
        psi: PathBuf,
        phi: PathBuf,
        /// Candidate catalyst state.
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        chi: Option<PathBuf>,
        /// Residual state for a general catalyst (requires --chi).
        #[arg(long, requires = "chi")]
        chi_prime: Option<PathBuf>,
        /// Catalyst dimension to search.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Standard)]
        mode: Mode,
        /// Trial budget for randomized search.
        #[arg(long = "M", default_value_t = 1000)]
        big_number: u64,
        /// Search strategy (see `catalyst strategies`).
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Rasterize the feasible residuals of a mutual-catalysis transformation.
    Region {
        /// Defaults to (0.5, 0.26, 0.24).
        #[arg(long)]
        psi: Option<PathBuf>,
        /// Defaults to (0.49, 0.48, 0.03).
        #[arg(long)]
        phi: Option<PathBuf>,
        /// Defaults to (0.62, 0.3, 0.08).
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        resolution: usize,
    },
    /// Monte Carlo success rate versus trial budget.
    Curve {
        /// Pair archive from `genpairs`; generated on the fly when absent.
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[command(flatten)]
        generator: GeneratorArgs,
        /// Comma-separated trial budgets.
        #[arg(long, value_delimiter = ',', default_values_t = catalyst_core::experiments::DEFAULT_BUDGETS)]
        budgets: Vec<u64>,
    },
    /// Generate certifiably catalyzable pairs.
    Genpairs {
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Run the worked-example regression suite.
    Fixtures,
    /// List the registered search strategies.
    Strategies,
}

#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    /// State dimension.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Catalyst dimension.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[arg(long, default_value_t = 5000)]
    pub count: usize,
    #[arg(long, default_value_t = 50_000_000)]
    pub max_rejections: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
