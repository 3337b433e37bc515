//! `fermisep` command-line front end.

mod commands;
mod state_file;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// I/O, parse or usage errors (exit 1).
    Parse(String),
    /// A state that is not a valid density matrix (exit 2).
    InvalidState(String),
    /// Self-test suites failed (exit 3).
    SelftestFailed,
}

impl CliError {
    pub fn invalid(e: fermisep::Error) -> Self {
        CliError::InvalidState(e.to_string())
    }

    pub fn io(path: &std::path::Path, e: impl std::fmt::Display) -> Self {
        CliError::Parse(format!("{}: {e}", path.display()))
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 1,
            CliError::InvalidState(_) => 2,
            CliError::SelftestFailed => 3,
        }
    }
}

impl From<fermisep::Error> for CliError {
    fn from(e: fermisep::Error) -> Self {
        use fermisep::Error as E;
        match e {
            E::InvalidParameter(_) | E::InvalidSplit { .. } | E::SizeLimit { .. } | E::UnsupportedSplit { .. } => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::InvalidState(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fermisep", version, about = "Separability of fermionic states")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Base numerical tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Quadrature nodes for the infinite chain, a power of two >= 64.
    #[arg(long, global = true, default_value_t = fermisep::xychain::DEFAULT_QUAD_POINTS)]
    pub quad_points: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a state file and print a JSON report.
    Classify {
        file: PathBuf,
    },
    /// Scan the XY chain over a (γ, β) grid and write CSV.
    ScanXy {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// `start:stop:count` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// `start:stop:count` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Also write the separability boundary as CSV.
        #[arg(long)]
        boundary: Option<PathBuf>,
    },
    /// E_F and E_F^π along a temperature line, as CSV.
    EofCurve {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        /// `start:stop:count` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Look for a state in P1π with a non-positive partial transpose.
    Search {
        #[arg(long, default_value_t = 100_000)]
        iters: usize,
        /// Mode split, `2x2` or `1x1`.
        #[arg(long, default_value = "2x2")]
        split: String,
    },
    /// Cross-check the numerical engines against reference computations.
    Selftest,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = cli.config;
    commands::validate(&config)?;
    if let Some(workers) = config.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| CliError::Parse(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::Classify { file } => commands::classify(&file, &config),
        Command::ScanXy { lambda, gamma, beta, boundary } => commands::scan_xy(lambda, &gamma, &beta, boundary.as_deref(), &config),
        Command::EofCurve { lambda, gamma, beta } => commands::eof_curve(lambda, gamma, &beta, &config),
        Command::Search { iters, split } => commands::search(iters, &split, &config),
        Command::Selftest => commands::selftest(&config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Parse(msg) => eprintln!("error: {msg}"),
                CliError::InvalidState(msg) => eprintln!("invalid state: {msg}"),
                CliError::SelftestFailed => eprintln!("selftest failed"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
