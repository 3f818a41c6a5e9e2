//! `fibrous`: Euler characteristics from fibrous decompositions, checked
//! against homology oracles.

mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{ComplexQuery, DEFAULT_VERIFY_MAX};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  usage error or empty parameter range
  3  expression parse error
  4  unknown space, parameter out of domain, overflow or depth limit
  5  verification failure (a value disagrees with another route)
  6  I/O error
  7  input file violates the JSON schema
  8  invalid complex (empty simplex, repeated vertex, zero top cells, ...)";

#[derive(Debug, Parser)]
#[command(name = "fibrous", version, about = "Euler characteristics from fibrous decompositions", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate χ of an expression such as "p(S^1)rosette(4)"
    #[command(after_help = EXIT_CODES)]
    Eval {
        expr: String,
        /// Print the derivation tree with fiber levels and arithmetic
        #[arg(long)]
        explain: bool,
        /// Print the derivation as JSON
        #[arg(long, conflicts_with = "explain")]
        json: bool,
    },
    /// Check a catalog family against its closed form, alternative
    /// decompositions and oracle models over a parameter range
    #[command(after_help = EXIT_CODES)]
    Verify {
        name: String,
        /// Smallest parameter (defaults to the bottom of the domain)
        #[arg(long)]
        min: Option<u64>,
        /// Largest parameter
        #[arg(long, default_value_t = DEFAULT_VERIFY_MAX)]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compute χ or homology of a complex given as a JSON file
    #[command(after_help = EXIT_CODES)]
    Complex {
        query: ComplexQuery,
        /// {"maximal_simplices": [[0,1],[1,2]]} or {"cell_counts": [1,0,1]}
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the named spaces
    #[command(after_help = EXIT_CODES)]
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            expr,
            explain,
            json,
        } => commands::eval(&expr, explain, json),
        Command::Verify {
            name,
            min,
            max,
            json,
        } => commands::verify(&name, min, max, json),
        Command::Complex { query, file, json } => commands::complex(query, &file, json),
        Command::Catalog { json } => Ok(commands::catalog(json)),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
