use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypermat_cli::{analyze, hyperdet, load, scheme, CliError, OutputFormat};

/// Exact analysis of (p,q,r) hypermatrices over the rationals.
#[derive(Parser)]
#[command(name = "hypermat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degeneracy, conciseness, essential format and, for (2,2,r), tensor rank.
    Analyze {
        path: PathBuf,
        /// Candidate degenerate point, e.g. `z:0,1,1,0`. Repeatable.
        #[arg(long = "hint", value_name = "AXIS:C1,C2,...")]
        hints: Vec<String>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Diagnose one point of the scheme L (x), M (y) or N (z).
    Scheme {
        path: PathBuf,
        #[arg(long)]
        axis: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Hyperdeterminant of a (2,2,2) tensor or discriminant of det L for (2,q,q).
    Hyperdet { path: PathBuf },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { path, hints, text, .. } => {
            let out = if text { OutputFormat::Text } else { OutputFormat::Json };
            analyze(&load(&path)?, &hints, out)
        }
        Command::Scheme { path, axis, point } => scheme(&load(&path)?, &axis, &point),
        Command::Hyperdet { path } => hyperdet(&load(&path)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hypermat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
