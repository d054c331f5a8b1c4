//! `hlab`: evaluate `f(r) = B_r(A) ∩ B`, its continuity witnesses, radius
//! scans and the built-in scenarios from JSON scene files.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 domain violation.

mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hlab_core::{GeomError, Scalar, SceneError};

#[derive(Parser)]
#[command(
    name = "hlab",
    version,
    about = "Exact evaluation of f(r) = B_r(A) ∩ B over polyhedral norms",
    after_help = "All arithmetic is exact; rationals are printed as \"p/q\" strings.\n\
                  HLAB_SEED is reserved and currently ignored: every command is deterministic."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f(r) (or its components when B has several parts).
    Eval {
        scene: PathBuf,
        /// Radius; defaults to the scene's "r".
        #[arg(long, value_parser = rational)]
        r: Option<Scalar>,
    },
    /// Continuity witness at the scene's "r" and "epsilon".
    Witness {
        scene: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// CSV of d_H(f(r), f(r_next)) over the scene's "r_range".
    Scan {
        scene: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Also plot ratio against r.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run a built-in scenario (figure1, figure2).
    Scenario {
        name: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Bracket d_H(A, B) on a grid, next to the exact value.
    Oracle {
        scene: PathBuf,
        #[arg(long, value_parser = rational)]
        step: Scalar,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn rational(text: &str) -> Result<Scalar, String> {
    hlab_core::scalar::parse(text)
        .ok_or_else(|| format!("expected a rational like \"p/q\", got {text:?}"))
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Domain(String),
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Failure {
        if e.is_domain_violation() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<SceneError> for Failure {
    fn from(e: SceneError) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Eval { scene, r } => commands::eval(&scene, r),
        Command::Witness { scene, side } => {
            commands::witness(&scene, matches!(side, SideArg::Left))
        }
        Command::Scan { scene, steps, svg } => commands::scan(&scene, steps, svg.as_deref()),
        Command::Scenario { name, svg } => commands::scenario(&name, svg.as_deref()),
        Command::Oracle { scene, step } => commands::oracle(&scene, &step),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
