//! Command-line front end: argument parsing, suite files and report output.
//!
//! Exit codes: `0` when every check passes, `1` when any check fails, `2` on
//! usage, configuration or I/O errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::Error;
use crate::qmatrix::{Triangular, WordSpec};
use crate::qscalar::CycloContext;
use crate::theorems::{self, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Frobenius,
    Main,
    Count,
    Positivity,
    SnTrace,
    RhoOracle,
    Qbinom,
    Suite,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "verify", about = "Exact checks of Chebyshev trace cancellations in quantum 2x2 matrices")]
struct Args {
    /// Check to run.
    #[arg(value_enum)]
    command: Command,
    /// Generator pattern over {U, L}; a single letter for rho-oracle.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    /// Order of q as a root of unity.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Suite file, one JSON object per line.
    #[arg(long)]
    suite: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    /// Parse failure or help request, reported by clap.
    Clap(clap::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Clap(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A single validated check request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Frobenius { n: u32, m: u32 },
    Main { word: WordSpec, n: u32, m: u32 },
    Count { word: WordSpec, n: u32 },
    Positivity { word: WordSpec, n: u32 },
    SnTrace { n: u32 },
    RhoOracle { kind: Triangular, n: u32 },
    Qbinom { n: u32 },
}

impl Job {
    /// Validates parameters for `command` without running anything.
    pub fn build(command: Command, word: Option<&str>, n: Option<u32>, m: Option<u32>) -> Result<Job, CliError> {
        let need_n = || n.ok_or_else(|| CliError::Usage("missing required parameter --n".into()));
        let need_word = || {
            let w = word.ok_or_else(|| CliError::Usage("missing required parameter --word".into()))?;
            WordSpec::parse(w).map_err(|_| CliError::Usage(format!("invalid word {w:?}")))
        };
        let at_least = |n: u32, lo: u32| {
            if n < lo {
                Err(CliError::Usage(format!("--n must be at least {lo}, got {n}")))
            } else {
                Ok(n)
            }
        };
        Ok(match command {
            Command::Frobenius => {
                let n = at_least(need_n()?, 2)?;
                let m = m.unwrap_or(n);
                CycloContext::new(m)?;
                Job::Frobenius { n, m }
            }
            Command::Main => {
                let word = need_word()?;
                let n = at_least(need_n()?, 1)?;
                let m = m.ok_or_else(|| CliError::Usage("missing required parameter --m".into()))?;
                CycloContext::for_q_squared_order(n, m)?;
                Job::Main { word, n, m }
            }
            Command::Count => Job::Count {
                word: need_word()?,
                n: at_least(need_n()?, 1)?,
            },
            Command::Positivity => Job::Positivity {
                word: need_word()?,
                n: at_least(need_n()?, 1)?,
            },
            Command::SnTrace => Job::SnTrace { n: need_n()? },
            Command::RhoOracle => {
                let w = word.ok_or_else(|| CliError::Usage("missing required parameter --word (U or L)".into()))?;
                let mut chars = w.chars();
                let kind = match (chars.next().and_then(Triangular::from_char), chars.next()) {
                    (Some(kind), None) => kind,
                    _ => return Err(CliError::Usage(format!("invalid word {w:?}: expected U or L"))),
                };
                Job::RhoOracle { kind, n: need_n()? }
            }
            Command::Qbinom => Job::Qbinom {
                n: at_least(need_n()?, 2)?,
            },
            Command::Suite => return Err(CliError::Usage("suite is not a single check".into())),
        })
    }

    pub fn run(&self) -> crate::Result<Report> {
        match self {
            Job::Frobenius { n, m } => theorems::check_frobenius(*n, *m),
            Job::Main { word, n, m } => theorems::check_main(word, *n, *m),
            Job::Count { word, n } => theorems::check_count(word, *n),
            Job::Positivity { word, n } => theorems::check_positivity(word, *n),
            Job::SnTrace { n } => theorems::check_sn_trace(*n),
            Job::RhoOracle { kind, n } => theorems::check_rho_oracle(*kind, *n),
            Job::Qbinom { n } => theorems::check_qbinom_vanishing(*n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Request {
    Single(Job),
    Suite(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub request: Request,
    pub output: OutputFormat,
}

/// Parses and validates `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(CliError::Clap)?;
    let request = match args.command {
        Command::Suite => {
            let path = args
                .suite
                .ok_or_else(|| CliError::Usage("missing required parameter --suite".into()))?;
            Request::Suite(path)
        }
        cmd => {
            if args.suite.is_some() {
                return Err(CliError::Usage("--suite is only valid with the suite command".into()));
            }
            Request::Single(Job::build(cmd, args.word.as_deref(), args.n, args.m)?)
        }
    };
    Ok(RunConfig {
        request,
        output: args.output,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteLine {
    check: String,
    word: Option<String>,
    n: Option<u32>,
    m: Option<u32>,
}

/// Reads and validates every line of a suite file. Blank lines are skipped.
pub fn load_suite(path: &Path) -> Result<Vec<Job>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut jobs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let at = |msg: String| CliError::Usage(format!("{}:{}: {msg}", path.display(), idx + 1));
        let item: SuiteLine = serde_json::from_str(line).map_err(|e| at(e.to_string()))?;
        let command = Command::from_str(&item.check, false)
            .ok()
            .filter(|c| *c != Command::Suite)
            .ok_or_else(|| at(format!("unknown check {:?}", item.check)))?;
        let job = Job::build(command, item.word.as_deref(), item.n, item.m).map_err(|e| match e {
            CliError::Usage(msg) => at(msg),
            other => other,
        })?;
        jobs.push(job);
    }
    Ok(jobs)
}

fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(|r| r.status.is_pass()) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn emit(out: &mut dyn Write, reports: &[Report], output: OutputFormat, as_array: bool) -> std::io::Result<()> {
    match output {
        OutputFormat::Json if as_array => writeln!(out, "{}", serde_json::to_string_pretty(reports)?),
        OutputFormat::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string_pretty(r)?)?;
            }
            Ok(())
        }
        OutputFormat::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            Ok(())
        }
    }
}

/// Runs the jobs concurrently, keeping their order in the output.
pub fn run_jobs(jobs: &[Job]) -> crate::Result<Vec<Report>> {
    jobs.par_iter().map(Job::run).collect()
}

/// Runs a configuration, writing reports to `out` and diagnostics to `err`.
pub fn run_to(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (jobs, as_array) = match &config.request {
        Request::Single(job) => (vec![job.clone()], false),
        Request::Suite(path) => match load_suite(path) {
            Ok(jobs) => (jobs, true),
            Err(e) => {
                let _ = writeln!(err, "{e}");
                return EXIT_USAGE;
            }
        },
    };
    let reports = match run_jobs(&jobs) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = emit(out, &reports, config.output, as_array) {
        let _ = writeln!(err, "error: writing reports: {e}");
        return EXIT_USAGE;
    }
    exit_code(&reports)
}

pub fn run(config: &RunConfig) -> i32 {
    run_to(config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs the suite at `path` with JSON output to stdout.
pub fn run_suite(path: &Path) -> i32 {
    run(&RunConfig {
        request: Request::Suite(path.to_path_buf()),
        output: OutputFormat::Json,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("verify").chain(s.split_whitespace()))
    }

    #[test]
    fn parses_examples() {
        let c = parse("main --word UULUL --n 2 --m 4 --output json").unwrap();
        assert_eq!(c.output, OutputFormat::Json);
        assert_eq!(
            c.request,
            Request::Single(Job::Main {
                word: WordSpec::parse("UULUL").unwrap(),
                n: 2,
                m: 4
            })
        );
        let c = parse("count --word UL --n 3").unwrap();
        assert_eq!(c.output, OutputFormat::Text);
        assert_eq!(
            c.request,
            Request::Single(Job::Count {
                word: WordSpec::parse("UL").unwrap(),
                n: 3
            })
        );
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse("main --word UX --n 2 --m 4").unwrap_err();
        assert!(e.to_string().contains("invalid word"), "{e}");
        assert!(matches!(parse("main --word UL --n 4 --m 2"), Err(CliError::Usage(_))));
        assert!(matches!(parse("main --word UL --n 4"), Err(CliError::Usage(_))));
        assert!(matches!(parse("count --n 4"), Err(CliError::Usage(_))));
        assert!(matches!(parse("count --word UL --n 2 --bogus 1"), Err(CliError::Clap(_))));
        assert!(matches!(parse("suite"), Err(CliError::Usage(_))));
        assert!(matches!(parse("rho-oracle --word UL --n 2"), Err(CliError::Usage(_))));
    }
}
