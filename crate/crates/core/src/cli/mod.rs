//! Command-line front end: config parsing, dispatch and exit codes.
//!
//! Exit codes: 0 on success, 2 for configuration problems (unreadable or
//! invalid config, bad overrides, wrong drive mode for the command), 3
//! for numerical failures (quadrature non-convergence, non-finite
//! results).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod config;

pub use config::RunConfig;

type Emitter = fn(&RunConfig, &mut dyn Write) -> Result<(), CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Numerical(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "casimir-spectra",
    version,
    about = "Particle-creation spectra, asymmetries and rates of a driven delta-delta' mirror"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-side spectral components over the frequency grid.
    Spectrum(CommonArgs),
    /// Left-minus-right spectral difference components.
    Diff(CommonArgs),
    /// Total created-particle numbers and the creation rate.
    Rates(CommonArgs),
    /// Interference sign-change roots and the rate-function null.
    Roots(CommonArgs),
    /// Multi-source spectra and their asymmetry enhancement.
    Enhance(CommonArgs),
    /// Rate and residual summary over a (mu0, lambda0, omega0, phi) grid.
    Sweep(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Override one config field by dotted path, e.g. --set mirror.mu0=2.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Optional thread cap for sweep parallelism from CASIMIR_SPECTRA_THREADS.
pub(crate) fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("CASIMIR_SPECTRA_THREADS") {
        Ok(raw) => {
            let n: usize = raw.parse().map_err(|_| {
                CliError::Config(format!(
                    "CASIMIR_SPECTRA_THREADS must be a positive integer, got {raw:?}"
                ))
            })?;
            if n == 0 {
                return Err(CliError::Config(
                    "CASIMIR_SPECTRA_THREADS must be at least 1".into(),
                ));
            }
            Ok(Some(n))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Config(format!(
            "CASIMIR_SPECTRA_THREADS is not valid unicode: {e}"
        ))),
    }
}

/// Run the parsed CLI; the binary maps errors onto exit codes.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let (args, emit): (&CommonArgs, Emitter) = match &cli.command {
        Command::Spectrum(a) => (a, commands::cmd_spectrum),
        Command::Diff(a) => (a, commands::cmd_diff),
        Command::Rates(a) => (a, commands::cmd_rates),
        Command::Roots(a) => (a, commands::cmd_roots),
        Command::Enhance(a) => (a, commands::cmd_enhance),
        Command::Sweep(a) => (a, commands::cmd_sweep),
    };

    let text = std::fs::read_to_string(&args.config).map_err(|e| {
        CliError::Config(format!(
            "cannot read config {}: {e}",
            args.config.display()
        ))
    })?;
    let config = RunConfig::from_json(&text, &args.set)?;

    // Render fully before touching the output path, so failures never
    // leave a truncated file behind.
    let mut buffer = Vec::new();
    emit(&config, &mut buffer)?;

    match &args.out {
        Some(path) => std::fs::write(path, &buffer)?,
        None => std::io::stdout().write_all(&buffer)?,
    }
    Ok(())
}
