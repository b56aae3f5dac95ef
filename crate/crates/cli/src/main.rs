//! `u3d4`: command-line front end for the verification suites.
//!
//! Exit status: 0 when every executed check passes, 1 when a check fails,
//! 2 for invalid arguments, 3 when an enumeration budget refuses the run.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use u3d4::group::{Level, DEFAULT_CENSUS_BUDGET};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "u3d4",
    version,
    about = "Sylow p-subgroups of 3D4(q^3): structure, classes and characters"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "U3D4_WORKERS")]
    workers: Option<usize>,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CENSUS_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exhaustive checks of the subsets of GF(q) and GF(q^3) behind the inertia arguments.
    FieldLemmas {
        #[arg(long, conflicts_with_all = ["p", "m"])]
        q: Option<u32>,
        #[arg(long, requires = "m")]
        p: Option<u32>,
        #[arg(long, requires = "p")]
        m: Option<u32>,
    },
    /// Conjugacy classes of U or one of its quotients.
    Census {
        #[arg(long)]
        q: u32,
        /// full, modY6, modY5Y6, modY4Y5Y6 or abelianization.
        #[arg(long, default_value_t = Level::Full)]
        level: Level,
    },
    /// Build the irreducible characters family by family.
    Characters {
        #[arg(long)]
        q: u32,
        /// Only this family (F6, F5, F4odd, F4even-q3, F4even-q3/2, F3, Flin).
        #[arg(long, conflicts_with = "verify")]
        family: Option<String>,
        /// Run the table checks on the full table.
        #[arg(long)]
        verify: bool,
        /// Write the table to this file (JSON unless --format csv).
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Re-derive the commutator relations from the D4 model.
    DeriveRelations {
        #[arg(long)]
        q: u32,
    },
    /// Field lemmas, structure, census, relations and characters in sequence.
    VerifyAll {
        #[arg(long)]
        q: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
