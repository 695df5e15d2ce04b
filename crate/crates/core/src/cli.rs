//! The `lamstd` command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad terms, invalid traces,
//! non-normal end terms, out-of-range indices, usage errors), 2 when a
//! resource bound is hit (enumeration cap, normalization fuel).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

use crate::alpha;
use crate::beta::contract_at;
use crate::document::TraceDocument;
use crate::error::Error;
use crate::oracle::{enumerate_traces, find_trace, frontier_cap_from_env};
use crate::sequence::standardize;
use crate::strategies::{normalize_leftmost, NormalizeOutcome};
use crate::syntax::parse_term;

pub const DEFAULT_FUEL: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "lamstd",
    version,
    about = "Standardize lambda-calculus reduction traces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a term and print its canonical form
    Parse { term: String },
    /// Count the redexes of a term
    Redexes { term: String },
    /// Contract the redex at a given position
    Step {
        #[arg(long)]
        at: usize,
        term: String,
    },
    /// Decide alpha-equivalence
    AlphaEq { left: String, right: String },
    /// Reduce leftmost-outermost and print the trace
    Normalize {
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
        term: String,
    },
    /// Turn a trace into a standard reduction sequence
    #[command(group(ArgGroup::new("input").required(true).args(["trace", "from"])))]
    Standardize {
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, requires_all = ["to", "depth"])]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long, requires = "from")]
        depth: Option<usize>,
    },
    /// Replay a trace file, optionally also checking standardness
    Verify {
        #[arg(long)]
        standard: bool,
        file: PathBuf,
    },
    /// Print every trace of at most DEPTH beta steps
    Oracle {
        #[arg(long)]
        depth: usize,
        term: String,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(String),
    NotFound(String),
    FuelExhausted(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(Error::ResourceLimit { .. }) | Failure::FuelExhausted(_) => 2,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Io(msg) | Failure::NotFound(msg) => msg.clone(),
            Failure::FuelExhausted(steps) => format!("fuel exhausted after {steps} steps"),
        }
    }
}

/// Run with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{e}");
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.exit_code()
        }
    }
}

fn read_document(path: &PathBuf) -> Result<TraceDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(TraceDocument::from_json(&text)?)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Parse { term } => emit(out, &parse_term(&term)?.to_string()),
        Command::Redexes { term } => emit(out, &parse_term(&term)?.count_redexes().to_string()),
        Command::Step { at, term } => emit(out, &contract_at(&parse_term(&term)?, at)?.to_string()),
        Command::AlphaEq { left, right } => {
            let verdict = alpha::alpha_eq(&parse_term(&left)?, &parse_term(&right)?);
            emit(out, if verdict.equivalent { "true" } else { "false" })
        }
        Command::Normalize { fuel, term } => {
            let outcome = normalize_leftmost(&parse_term(&term)?, fuel);
            emit(out, &TraceDocument::from_trace(outcome.trace()).to_json())?;
            match outcome {
                NormalizeOutcome::Normalized(_) => Ok(()),
                NormalizeOutcome::FuelExhausted(t) => Err(Failure::FuelExhausted(t.steps.len())),
            }
        }
        Command::Standardize {
            trace,
            from,
            to,
            depth,
        } => {
            let t = match (trace, from, to, depth) {
                (Some(path), ..) => read_document(&path)?.to_trace()?,
                (None, Some(from), Some(to), Some(depth)) => {
                    let (m, n) = (parse_term(&from)?, parse_term(&to)?);
                    find_trace(&m, &n, depth, frontier_cap_from_env())?.ok_or_else(|| {
                        Failure::NotFound(format!("no trace from {m} to {n} within {depth} steps"))
                    })?
                }
                _ => unreachable!("clap enforces one input"),
            };
            let seq = standardize(&t)?;
            emit(out, &TraceDocument::from_sequence(&seq).to_json())
        }
        Command::Verify { standard, file } => {
            let doc = read_document(&file)?;
            if standard {
                doc.to_sequence()?.check()?;
                emit(out, "valid standard sequence")
            } else {
                doc.to_trace()?.check()?;
                emit(out, "valid trace")
            }
        }
        Command::Oracle { depth, term } => {
            let traces = enumerate_traces(&parse_term(&term)?, depth, frontier_cap_from_env())?;
            let docs: Vec<_> = traces.iter().map(TraceDocument::from_trace).collect();
            let json =
                serde_json::to_string_pretty(&docs).map_err(|e| Failure::Io(e.to_string()))?;
            emit(out, &json)
        }
    }
}
