//! `lsk`: H-functions, surgery d-invariants and related invariants from the command line.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::source::Source;

#[derive(Parser, Debug)]
#[command(name = "lsk", version, about = "H-functions and surgery d-invariants of L-space links")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Named family: "unknot", "torus P Q", "whitehead" or "unlink2".
    #[arg(long)]
    family: Option<String>,
    /// Inline JSON input document.
    #[arg(long)]
    input: Option<String>,
    /// Path to a JSON input document.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the H-function table and its validation verdict.
    Hfun {
        #[command(flatten)]
        input: InputArgs,
        /// Print h = H - H_unlink instead of H.
        #[arg(long)]
        lower: bool,
        /// Half-width of the printed table.
        #[arg(long)]
        radius: Option<i64>,
    },
    /// d-invariants of surgery, one "i1 i2 d" row per label.
    Dinv {
        #[command(flatten)]
        input: InputArgs,
        /// Framing, one value per component.
        #[arg(short = 'p', num_args = 1..=2, required = true, allow_negative_numbers = true)]
        framing: Vec<i64>,
        /// Spin^c label, one residue per component. Defaults to all zeros.
        #[arg(long, num_args = 1..=2, allow_negative_numbers = true, conflicts_with = "all")]
        label: Option<Vec<i64>>,
        /// Every label.
        #[arg(long)]
        all: bool,
        /// Also compute each value with the cell-complex oracle; exit 3 on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Surgery framings that yield L-spaces.
    Region {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Casson invariants of (+-1)-surgeries.
    Casson {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Sato-Levine invariant.
    Beta {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Four-genus lower bounds.
    Genus {
        #[command(flatten)]
        input: InputArgs,
        /// Largest genus per component searched.
        #[arg(long, default_value_t = 4)]
        cap: i64,
        /// Check a genus pair against the d-invariant inequalities.
        #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
        check: Option<Vec<i64>>,
        /// Positive framings used by --check.
        #[arg(long, num_args = 2, default_values_t = [1, 1], value_names = ["P1", "P2"])]
        framings: Vec<i64>,
    },
    /// nu+ of a knot, or of each component and blow-down of a link.
    Nuplus {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the closed formula against the cell-complex oracle.
    OracleCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Check every framing with 0 < |p| <= PMAX.
        #[arg(long, env = "LSK_PMAX_DEFAULT", default_value_t = 3)]
        pmax: i64,
    },
    /// beta, Casson table, L-space region and genus bound in one report.
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 4)]
        cap: i64,
    },
}

pub const EXIT_INVALID: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_USAGE: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(commands::Failure { code, message, output }) => {
            if let Some(out) = output {
                print!("{out}");
            }
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<String, commands::Failure> {
    let json = cli.json;
    let load = |i: &InputArgs| Source::from_args(i).and_then(|s| s.resolve());
    match &cli.command {
        Command::Hfun { input, lower, radius } => commands::hfun(&load(input)?, *lower, *radius, json),
        Command::Dinv { input, framing, label, all, oracle } => {
            commands::dinv(&load(input)?, framing, label.as_deref(), *all, *oracle, json)
        }
        Command::Region { input } => commands::region(&load(input)?, json),
        Command::Casson { input } => commands::casson(&load(input)?, json),
        Command::Beta { input } => commands::beta(&load(input)?, json),
        Command::Genus { input, cap, check, framings } => {
            commands::genus(&load(input)?, *cap, check.as_deref(), framings, json)
        }
        Command::Nuplus { input } => commands::nuplus(&load(input)?, json),
        Command::OracleCheck { input, pmax } => commands::oracle_check(&load(input)?, *pmax, json),
        Command::Report { input, cap } => commands::report(&load(input)?, *cap, json),
    }
}
