//! `biquandle`: command-line front end for biquandle-core.

mod commands;
mod error;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use error::{CliError, EXIT_FORMAT};
use input::Kind;
use output::Format;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  axiom failure (invalid quandle, biquandle or structure) or a reproduce mismatch
  2  malformed input, unreadable file or bad arguments
  3  unknown fixture
  4  Hom-object requested for a non-medial target
  5  internal error

Set BIQUANDLE_THREADS to cap the number of worker threads.";

#[derive(Debug, Parser)]
#[command(name = "biquandle", version, about = "Finite quandles, biquandles and knot coloring invariants")]
#[command(after_help = EXIT_CODES)]
pub struct Cli {
    /// Output format. JSON and CSV carry a `schema` field.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Arc colorings by a quandle.
    Quandle,
    /// Semiarc colorings by a biquandle (or the biquandle a structure induces).
    Biquandle,
    /// One biquandle count per structure class on a quandle.
    Tuple,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms and report every property.
    Check {
        path: PathBuf,
        /// Overrides the kind guessed from the file layout.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// List biquandle structures on a quandle up to isomorphism.
    Structures {
        path: PathBuf,
        /// Classify by conjugation with Aut(Q) instead of by isomorphism of the
        /// induced biquandles.
        #[arg(long)]
        direct: bool,
    },
    /// Print the biquandle induced by a structure.
    Induce { path: PathBuf },
    /// Print the associated quandle and structure maps of a biquandle.
    Assoc { path: PathBuf },
    /// Count colorings of a knot diagram.
    Color {
        /// Fixture name or signed Gauss code.
        diagram: String,
        /// Coloring quandle, biquandle or structure file.
        target: PathBuf,
        #[arg(value_enum)]
        mode: Mode,
        /// Print the colorings themselves.
        #[arg(long)]
        list: bool,
        /// Use the mirror image of the diagram.
        #[arg(long)]
        mirror: bool,
        /// Fixture file to search instead of the built-in table.
        #[arg(long, value_name = "FILE")]
        fixtures: Option<PathBuf>,
    },
    /// Count homomorphisms, optionally building the Hom-object.
    Hom {
        #[arg(required_unless_present = "all_pairs")]
        source: Option<PathBuf>,
        #[arg(required_unless_present = "all_pairs")]
        target: Option<PathBuf>,
        /// Print the Hom-object tables (the target must be medial).
        #[arg(long)]
        table: bool,
        /// Print the homomorphisms.
        #[arg(long)]
        list: bool,
        /// Count homomorphisms between every pair of files in a directory,
        /// taken in file-name order.
        #[arg(long, value_name = "DIR", conflicts_with_all = ["source", "target", "table", "list"])]
        all_pairs: Option<PathBuf>,
    },
    /// Quotient a biquandle by a congruence.
    #[command(group(ArgGroup::new("by").required(true).args(["pairs", "two_reductive"])))]
    Quotient {
        path: PathBuf,
        /// Generating pairs, 1-based, e.g. `1=2,3=4`.
        #[arg(long)]
        pairs: Option<String>,
        /// Quotient by the congruence generated by the 2-reductivity identities.
        #[arg(long)]
        two_reductive: bool,
    },
    /// List the built-in knot diagrams, or show one.
    Fixtures {
        name: Option<String>,
        #[arg(long, value_name = "FILE")]
        file: Option<PathBuf>,
    },
    /// Recompute every reference value and compare.
    Reproduce {
        /// Fixture file to use instead of the built-in table.
        #[arg(long, value_name = "FILE")]
        fixtures: Option<PathBuf>,
        /// Color the mirror image of every diagram.
        #[arg(long)]
        mirror: bool,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("BIQUANDLE_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("BIQUANDLE_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot set up {n} threads: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FORMAT);
    }
    match commands::run(&cli.command) {
        Ok((out, code)) => match out.render(cli.format) {
            Ok(s) => {
                let mut stdout = std::io::stdout().lock();
                // A closed pipe is not worth reporting.
                let _ = stdout.write_all(s.as_bytes()).and_then(|()| stdout.flush());
                ExitCode::from(code)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code())
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
