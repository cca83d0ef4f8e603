//! `sadik`: evaluate Sadik transforms, run the rule self-checks, solve
//! fractional relaxation problems and compute transfer-function responses.
//! Data goes to stdout or `--out`; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 a check or tolerance failed, 2 bad arguments.

mod commands;
mod config;
mod output;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sadik_core::SadikError;

#[derive(Parser)]
#[command(name = "sadik", version, about = "Sadik transform toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward transform of a table function: quadrature vs closed form.
    Transform(commands::TransformArgs),
    /// Check a transform rule against quadrature.
    Verify(commands::VerifyArgs),
    /// Relaxation equation: Mittag-Leffler solution vs Adams oracle.
    Fode(commands::FodeArgs),
    /// Impulse or step response of (r v^(alpha gamma) + d)^(-1).
    Control(commands::ControlArgs),
    /// Mittag-Leffler function E_{p,q} and its derivatives.
    Ml(commands::MlArgs),
    /// Caputo derivative or Riemann-Liouville integral of a table function.
    Caputo(commands::CaputoArgs),
}

/// Bad input; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

fn is_usage(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        err.downcast_ref::<SadikError>(),
        Some(
            SadikError::InvalidParams(_)
                | SadikError::InvalidOrder(_)
                | SadikError::InvalidGrid(_)
                | SadikError::NegativeDelay(_)
                | SadikError::LengthMismatch { .. }
                | SadikError::UnsupportedFunction(_)
                | SadikError::DivergentTransform { .. }
        )
    )
}

fn thread_pool() -> Result<rayon::ThreadPool, UsageError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(s) = std::env::var("SADIK_FRAC_THREADS") {
        let n: usize = s.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            UsageError(format!(
                "SADIK_FRAC_THREADS must be a positive integer, got '{s}'"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| UsageError(e.to_string()))
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let pool = thread_pool()?;
    pool.install(|| match cli.command {
        Command::Transform(a) => commands::transform(a),
        Command::Verify(a) => commands::verify(a),
        Command::Fode(a) => commands::fode(a),
        Command::Control(a) => commands::control(a),
        Command::Ml(a) => commands::ml(a),
        Command::Caputo(a) => commands::caputo(a),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) if is_usage(&e) => {
            eprintln!("error: {e:#}");
            eprintln!("run 'sadik help' for usage");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
