//! Front end for the `tck` binary.
//!
//! [`run`] takes the full argument vector and returns the exit code, writing
//! the report to `out` and a one-line diagnostic to `err` on failure.

use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use rayon::prelude::*;

use tck_core::polyring::{SolveOptions, DEFAULT_SEED};
use tck_core::Error;

pub mod args;
mod commands;
mod input;
mod report;

use args::{Cli, Format, GlobalOpts};

pub const OK: i32 = 0;
/// Checked and false.
pub const NEGATIVE: i32 = 1;
pub const USAGE: i32 = 2;
pub const PARSE: i32 = 3;
/// Could not be checked.
pub const DEGENERATE: i32 = 4;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Degenerate(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => USAGE,
            Failure::Parse(_) => PARSE,
            Failure::Degenerate(_) => DEGENERATE,
        }
    }

    fn line(&self) -> String {
        let (kind, msg) = match self {
            Failure::Usage(m) => ("usage", m),
            Failure::Parse(m) => ("parse", m),
            Failure::Degenerate(m) => ("degenerate", m),
        };
        format!("tck: {kind} error: {}", msg.replace('\n', " "))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnknownVariable(_)
            | Error::VarSetMismatch { .. }
            | Error::NotHomogeneous { .. }
            | Error::IncompleteAssignment { .. }
            | Error::BadParametrization => Failure::Parse(e.to_string()),
            _ => Failure::Degenerate(e.to_string()),
        }
    }
}

impl From<tck_core::polyparse::ParseError> for Failure {
    fn from(e: tck_core::polyparse::ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

/// Captured result of one job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let job = execute(argv, true);
    // write failures on the standard streams are not recoverable here
    let _ = out.write_all(job.stdout.as_bytes());
    let _ = err.write_all(job.stderr.as_bytes());
    job.code
}

/// Parses and runs `argv` without touching the process streams.
pub fn execute(argv: &[String], allow_batch: bool) -> JobOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => return clap_failure(e),
    };
    if let Some(path) = &cli.batch {
        if !allow_batch || cli.command.is_some() {
            return failure(Failure::Usage("--batch takes no subcommand and cannot be nested".into()));
        }
        return batch(path, &cli.global, argv);
    }
    let Some(cmd) = &cli.command else {
        return failure(Failure::Usage("a subcommand or --batch is required (see --help)".into()));
    };
    let g = &cli.global;
    let ctx = commands::Ctx {
        chart: g.chart.index(),
        opts: SolveOptions {
            seed: g.seed.unwrap_or(DEFAULT_SEED),
            retries: g.retries.unwrap_or(SolveOptions::default().retries),
        },
    };
    match commands::dispatch(cmd, &ctx) {
        Ok(o) => JobOutput {
            stdout: render(&o.value, g.format, allow_batch),
            stderr: String::new(),
            code: o.code,
        },
        Err(f) => failure(f),
    }
}

fn render(value: &serde_json::Value, format: Format, pretty: bool) -> String {
    match format {
        Format::Text => report::text(value),
        Format::Json if pretty => format!("{}\n", serde_json::to_string_pretty(value).expect("json")),
        Format::Json => format!("{value}\n"),
    }
}

fn failure(f: Failure) -> JobOutput {
    JobOutput {
        stdout: String::new(),
        stderr: format!("{}\n", f.line()),
        code: f.code(),
    }
}

fn clap_failure(e: clap::Error) -> JobOutput {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => JobOutput {
            stdout: e.to_string(),
            stderr: String::new(),
            code: OK,
        },
        _ => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let msg = first.trim_start_matches("error: ");
            failure(Failure::Usage(format!("{msg} (see --help)")))
        }
    }
}

/// Global options given on the outer command line, as arguments to prepend
/// to every job.
fn inherited(g: &GlobalOpts, argv: &[String]) -> Vec<String> {
    let given = |name: &str| argv.iter().any(|a| a == name || a.starts_with(&format!("{name}=")));
    let mut v = Vec::new();
    if given("--format") {
        v.push(format!("--format={}", if g.format == Format::Json { "json" } else { "text" }));
    }
    if given("--chart") {
        v.push(format!("--chart=x{}", g.chart.index()));
    }
    if let Some(s) = g.seed {
        v.push(format!("--seed={s}"));
    }
    if let Some(r) = g.retries {
        v.push(format!("--retries={r}"));
    }
    v
}

fn batch(path: &std::path::Path, g: &GlobalOpts, argv: &[String]) -> JobOutput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return failure(Failure::Usage(format!("cannot read {}: {e}", path.display()))),
    };
    let prefix = inherited(g, argv);
    let jobs: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<JobOutput> = jobs
        .par_iter()
        .map(|&(lineno, line)| {
            let words = match shell_words::split(line) {
                Ok(w) => w,
                Err(e) => return failure(Failure::Usage(format!("line {lineno}: {e}"))),
            };
            let mut args = vec![argv[0].clone()];
            args.extend(prefix.iter().cloned());
            args.extend(words);
            let mut r = execute(&args, false);
            if !r.stderr.is_empty() {
                r.stderr = format!("line {lineno}: {}", r.stderr);
            }
            r
        })
        .collect();
    let mut all = JobOutput { stdout: String::new(), stderr: String::new(), code: OK };
    for r in results {
        all.stdout.push_str(&r.stdout);
        if g.format == Format::Text && !r.stdout.is_empty() {
            all.stdout.push('\n');
        }
        all.stderr.push_str(&r.stderr);
        all.code = all.code.max(r.code);
    }
    all
}
