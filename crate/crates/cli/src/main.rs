//! `zonotopal`: command-line front end.
//!
//! Exit status: 0 on success, 2 when a verification fails, 1 on bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "zonotopal",
    version,
    about = "Zonotopal and Orlik-Terao algebras of linear spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Matrix file (labels, then rows) or, with --mode, a graph file.
    pub path: PathBuf,
    /// Read the input as a graph (`tail head label` per line).
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Graphical,
    Cographical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Internal,
    Central,
    External,
    Otbar,
    Srbar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Theorem {
    Internal,
    Central,
    HrInternal,
    Equivariant,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Space {
    Pminus,
    Pcentral,
    Pplus,
    Otbar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank, circuits, flats with Möbius values, counts and Tutte polynomial.
    Matroid {
        #[command(flatten)]
        input: Input,
        /// Describe the matroid of the Gale dual instead.
        #[arg(long)]
        dual: bool,
    },
    /// Hilbert function of one of the graded algebras.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Check a decomposition or equivariance theorem on the input.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Orderings for hr-internal, as comma-separated labels (repeatable).
        /// Defaults to the input order plus four seeded random orderings.
        #[arg(long = "order")]
        orders: Vec<String>,
        /// Automorphism file for the equivariant check.
        #[arg(long)]
        auto: Option<PathBuf>,
    },
    /// Betti table of the Schubert variety.
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Euler characteristic identities.
    Euler {
        #[command(flatten)]
        input: Input,
        /// Check the graded identity instead.
        #[arg(long)]
        graded: bool,
    },
    /// Traces of automorphisms on a graded piece.
    Char {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        which: Space,
        #[arg(long)]
        deg: usize,
        /// Automorphism file; every generator is reported.
        #[arg(long)]
        auto: PathBuf,
    },
    /// Test the defining relations against random vectors of L.
    Audit {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn status(result: &anyhow::Result<commands::Output>) -> u8 {
    match result {
        Ok(output) if output.passed => 0,
        Ok(_) => 2,
        Err(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command);
    match &result {
        Ok(output) => print!("{}", output.text),
        Err(e) => eprintln!("error: {e:#}"),
    }
    ExitCode::from(status(&result))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn output(passed: bool) -> anyhow::Result<commands::Output> {
        Ok(commands::Output {
            text: String::new(),
            passed,
        })
    }

    #[test]
    fn exit_statuses() {
        assert_eq!(status(&output(true)), 0);
        assert_eq!(status(&output(false)), 2);
        assert_eq!(status(&Err(anyhow::anyhow!("bad input"))), 1);
    }
}
