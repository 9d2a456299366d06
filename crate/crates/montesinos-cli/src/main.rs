//! Command-line front end: boundary slopes of a knot, realizations of
//! `(b, q)` pairs, self-verification and per-tangle path enumeration.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use montesinos::output::{render_paths, render_realization, render_surfaces};
use montesinos::solver::exhaustive_depth;
use montesinos::verify::verify_paper;
use montesinos::{enumerate_edgepaths, parse_knot, realize, slopes, Error, Format, Tangle};

#[derive(Parser)]
#[command(
    name = "montesinos",
    version,
    about = "Boundary slopes and candidate surfaces of Montesinos knots"
)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Longest edgepath to consider; defaults to a bound that never truncates.
    #[arg(long, global = true, value_name = "K")]
    max_edges: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every candidate surface of a knot, e.g. "P(-3,3,7)" or "M(-2/5,1/3,2/7)".
    Slopes { knot: String },
    /// Construct a knot with an orientable surface having b boundary
    /// components (b even) and slope denominator q.
    Realize { b: u64, q: u64 },
    /// Recompute the closed forms, constructions and screens.
    VerifyPaper,
    /// Admissible edgepaths of one tangle p/q.
    Enumerate { tangle: String },
}

enum Failure {
    Usage(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Verification(e.to_string()),
            e => Failure::Usage(e),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Table,
    };
    if cli.max_edges == Some(0) {
        return Err(Failure::Usage(Error::InvalidArgument(
            "--max-edges must be positive".into(),
        )));
    }
    match cli.command {
        Command::Slopes { knot } => {
            let knot = parse_knot(&knot)?;
            let depth = cli.max_edges.unwrap_or_else(|| exhaustive_depth(&knot));
            let records: Vec<_> = slopes(&knot, depth)?.iter().map(|s| s.record()).collect();
            print!("{}", render_surfaces(&records, format)?);
        }
        Command::Realize { b, q } => {
            let result = realize(b, q)?;
            print!("{}", render_realization(&result, format)?);
            if !result.verified() {
                return Err(Failure::Verification("a postcondition failed".into()));
            }
        }
        Command::VerifyPaper => {
            let reports = verify_paper()?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&reports)
                        .map_err(|e| Error::InvalidArgument(e.to_string()))?
                ),
                _ => reports.iter().for_each(|r| println!("{}", r.summary())),
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification("some checks failed".into()));
            }
        }
        Command::Enumerate { tangle } => {
            let t: Tangle = tangle.parse()?;
            let depth = cli.max_edges.unwrap_or_else(|| t.max_path_edges());
            print!(
                "{}",
                render_paths(&enumerate_edgepaths(&t, depth)?, format)?
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
