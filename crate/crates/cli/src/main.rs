//! `burgers`: stationary states, spectra, Lyapunov exponents and decay
//! simulations for `u_t + u u_x = nu u_xx` on `[0, l]`, `u(0) = A`, `u(l) = B`.
//!
//! Tables are CSV, single reports JSON; numbers carry 17 significant digits.
//! Output goes to `--out`, else `$BURGERS_OUT_DIR/<command>.<ext>`, else
//! standard output. Exit codes: 2 invalid input, 3 numerical failure, 4 I/O.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use burgers_core::BurgersError;
use clap::{Args, Parser, Subcommand};

use config::{CommonArgs, Knobs, PerturbKind, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<BurgersError> for CliError {
    fn from(e: BurgersError) -> Self {
        match e {
            BurgersError::InvalidProblem(_)
            | BurgersError::InvalidArgument(_)
            | BurgersError::OutOfDomain { .. }
            | BurgersError::EqualBoundaryValues => CliError::Validation(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "burgers",
    version,
    about = "Stationary states, spectra and decay rates for the viscous Burgers equation"
)]
struct Cli {
    /// Default directory for outputs when --out is not given.
    #[arg(long, env = "BURGERS_OUT_DIR", global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Case label, H, C0, k0, x0 and lambda0 as one JSON object.
    Classify(CommonArgs),
    /// Stationary profile as (x, u).
    Stationary {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of grid points including both ends.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Least eigenvalues as (i, branch, xi, lambda, zero_count).
    Spectrum(CountArgs),
    /// Lyapunov exponents mu_1..mu_count as (i, mu).
    Lyapunov(CountArgs),
    /// Distance of a modal solution to the stationary state as (t, D).
    Modal {
        #[command(flatten)]
        common: CommonArgs,
        /// Mode index i >= 1 (default 1).
        #[arg(long)]
        mode: Option<usize>,
        /// Perturbation amplitude relative to its largest admissible value (default 1e-3).
        #[arg(long)]
        ratio: Option<f64>,
        /// Number of time samples (default 1025).
        #[arg(long)]
        samples: Option<usize>,
        /// Final time (default: ten decades of decay).
        #[arg(long)]
        t_end: Option<f64>,
    },
    /// Finite-difference decay run; JSON summary on stdout, (t, D) table to a file.
    Evolve {
        #[command(flatten)]
        common: CommonArgs,
        /// Grid cells (default 400).
        #[arg(long)]
        cells: Option<usize>,
        /// Initial perturbation of the stationary state (default: default).
        #[arg(long, value_enum)]
        perturb: Option<PerturbKind>,
        /// Mode index for --perturb mode / modal (default 1).
        #[arg(long)]
        mode: Option<usize>,
        /// Perturbation size for --perturb default / mode (default 1e-3).
        #[arg(long)]
        amplitude: Option<f64>,
        /// Amplitude ratio for --perturb modal (default 1e-3).
        #[arg(long)]
        ratio: Option<f64>,
        /// Final time (default: eleven decades of decay at the predicted rate).
        #[arg(long)]
        t_end: Option<f64>,
    },
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of rows (default 10).
    #[arg(long)]
    count: Option<usize>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let out_dir = cli.out_dir.as_deref();
    match cli.command {
        Command::Classify(common) => commands::classify_cmd(&RunConfig::resolve(&common, &Knobs::default())?, out_dir),
        Command::Stationary { common, points } => {
            let knobs = Knobs {
                points,
                ..Default::default()
            };
            commands::stationary_cmd(&RunConfig::resolve(&common, &knobs)?, out_dir)
        }
        Command::Spectrum(CountArgs { common, count }) => {
            let knobs = Knobs {
                count,
                ..Default::default()
            };
            commands::spectrum_cmd(&RunConfig::resolve(&common, &knobs)?, out_dir)
        }
        Command::Lyapunov(CountArgs { common, count }) => {
            let knobs = Knobs {
                count,
                ..Default::default()
            };
            commands::lyapunov_cmd(&RunConfig::resolve(&common, &knobs)?, out_dir)
        }
        Command::Modal {
            common,
            mode,
            ratio,
            samples,
            t_end,
        } => {
            let knobs = Knobs {
                mode,
                ratio,
                samples,
                t_end,
                ..Default::default()
            };
            commands::modal_cmd(&RunConfig::resolve(&common, &knobs)?, out_dir)
        }
        Command::Evolve {
            common,
            cells,
            perturb,
            mode,
            amplitude,
            ratio,
            t_end,
        } => {
            let knobs = Knobs {
                cells,
                perturb,
                mode,
                amplitude,
                ratio,
                t_end,
                ..Default::default()
            };
            commands::evolve_cmd(&RunConfig::resolve(&common, &knobs)?, out_dir)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("burgers: {e}");
            ExitCode::from(e.code())
        }
    }
}
