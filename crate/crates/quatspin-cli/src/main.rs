//! `quatspin`: line-delimited JSON front end to the quatspin library.
//!
//! Requests are read from stdin one JSON object per line, and one report is
//! written per request. The exit code is the worst outcome over all
//! requests: 0 pass, 1 identity violation, 2 input error.

mod commands;
mod json;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use quatspin::quaternion::DEFAULT_TOL;
use quatspin::verify::Suite;
use serde_json::{json, Value};

use commands::{Method, Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "quatspin", version, about = "Quaternionic spinors, horospheres and lambda lengths")]
struct Cli {
    /// Tolerance. For `validate`, `convert` and `act` it is the acceptance
    /// tolerance of the inputs; for `lambda --method both` and `verify` it is
    /// the bound on the reported residual.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Emit one compact JSON object per line (`--json false` pretty-prints).
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the spinor or Clifford-matrix conditions of each request.
    Validate,
    /// Lambda length of `{"k1": spinor, "k2": spinor}`.
    Lambda {
        #[arg(long, value_enum, default_value_t = Method::Pdet)]
        method: Method,
    },
    /// Decorated horosphere of a spinor in the upper half-space.
    Horosphere,
    /// Convert a point between the hyperboloid, disc and upper half-space models.
    Convert,
    /// Apply a Clifford matrix to a spinor, a Minkowski point or a boundary point.
    Act,
    /// Run randomized identity checks.
    Verify {
        /// One of ptolemy, antisym, holonomy, conformal, detmiracle, quasi,
        /// parabolic, fibres, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Base seed; trial t uses seed + t.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock time per suite (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
}

fn emit(out: &mut impl Write, body: &Value, compact: bool) -> io::Result<()> {
    if compact {
        writeln!(out, "{}", json::to_line(body))
    } else {
        writeln!(out, "{}", serde_json::to_string_pretty(body).expect("serializing a Value cannot fail"))
    }
}

fn run_request(command: &Command, line: &str, tol: Option<f64>) -> Result<Report> {
    let input: Value = serde_json::from_str(line)?;
    match command {
        Command::Validate => commands::validate(&input, tol.unwrap_or(DEFAULT_TOL)),
        Command::Lambda { method } => commands::lambda(&input, *method, tol.unwrap_or(DEFAULT_TOL)),
        Command::Horosphere => commands::horosphere(&input),
        Command::Convert => commands::convert(&input, tol.unwrap_or(DEFAULT_TOL)),
        Command::Act => commands::act(&input, tol.unwrap_or(DEFAULT_TOL)),
        Command::Verify { .. } => unreachable!("verify reads no requests"),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::Lambda { .. } => "lambda",
        Command::Horosphere => "horosphere",
        Command::Convert => "convert",
        Command::Act => "act",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut worst = Outcome::Pass;

    if let Command::Verify { suite, trials, seed, timing } = &cli.command {
        let suite = match suite.as_str() {
            "all" => None,
            s => match s.parse::<Suite>() {
                Ok(s) => Some(s),
                Err(e) => {
                    eprintln!("error: {e}");
                    let _ = emit(&mut out, &json!({"command": "verify", "error": e}), cli.json);
                    return ExitCode::from(Outcome::InputError as u8);
                }
            },
        };
        if let Some(t) = cli.tol.filter(|t| !(*t >= 0.0)) {
            eprintln!("error: tolerance must be a nonnegative number, got {t}");
            return ExitCode::from(Outcome::InputError as u8);
        }
        let report = commands::verify(suite, *trials, *seed, cli.tol, *timing);
        if emit(&mut out, &report.body, cli.json).is_err() {
            return ExitCode::from(Outcome::InputError as u8);
        }
        return ExitCode::from(report.outcome as u8);
    }

    for line in io::stdin().lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: reading stdin: {e}");
                worst = Outcome::InputError;
                break;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let (body, outcome) = match run_request(&cli.command, &line, cli.tol) {
            Ok(r) => (r.body, r.outcome),
            Err(e) => {
                let msg = format!("{e:#}");
                eprintln!("error: {msg}");
                (json!({"command": command_name(&cli.command), "error": msg}), Outcome::InputError)
            }
        };
        worst = worst.max(outcome);
        if emit(&mut out, &body, cli.json).is_err() {
            return ExitCode::from(Outcome::InputError as u8);
        }
    }
    ExitCode::from(worst as u8)
}
