//! `sigtime`: schedule-code counting, codebooks, concatenated codes and relay
//! rate sweeps from the command line.

mod codebook;
mod concat;
mod count;
mod output;
mod relay;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "sigtime", version, about = "Signal-time coding toolkit")]
struct Cli {
    /// Write CSV output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Scenario config file (flat `key = value` lines) for relay commands.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Accepted for scripting compatibility; every command is deterministic.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count valid schedule words S(n) and their information rates.
    Count(count::Args),
    /// Build, rank, unrank and replay schedule codewords.
    #[command(subcommand)]
    Codebook(codebook::Command),
    /// Concatenated codes built from short component codes.
    #[command(subcommand)]
    Concat(concat::Command),
    /// Rate analysis of the three-node relay network.
    #[command(subcommand)]
    Relay(relay::Command),
}

/// Why a command failed: bad input (exit 2) or a module error (exit 1).
pub enum Failure {
    Usage {
        flag: &'static str,
        message: String,
    },
    Module {
        module: &'static str,
        error: anyhow::Error,
    },
}

impl Failure {
    pub fn usage(flag: &'static str, message: impl Into<String>) -> Self {
        Failure::Usage {
            flag,
            message: message.into(),
        }
    }

    pub fn module(module: &'static str) -> impl Fn(sigtime_core::Error) -> Self + Copy {
        move |e| Failure::Module {
            module,
            error: e.into(),
        }
    }
}

pub type Outcome = Result<(), Failure>;

/// Global options every subcommand may read.
pub struct Globals {
    pub csv: Option<PathBuf>,
    pub config: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seedless;
    let globals = Globals {
        csv: cli.csv,
        config: cli.config,
    };
    let result = match cli.command {
        Command::Count(args) => count::run(&args, &globals),
        Command::Codebook(cmd) => codebook::run(&cmd, &globals),
        Command::Concat(cmd) => concat::run(&cmd, &globals),
        Command::Relay(cmd) => relay::run(&cmd, &globals),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage { flag, message }) => {
            eprintln!("error: {flag}: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Module { module, error }) => {
            eprintln!("{module}: {error:#}");
            ExitCode::FAILURE
        }
    }
}
