//! `bncalc`: invariants of the Brill-Noether curve from the command line.
//!
//! Exit codes: 0 success, 1 a verification or example comparison failed,
//! 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bncalc_core::invariants::{full_invariants, MIN_A};
use bncalc_core::render::{
    render_example, render_invariants, render_report, render_table, OutputFormat,
};
use bncalc_core::verify::{self, checks::check_names, Example};
use bncalc_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "bncalc",
    version,
    about = "Exact invariants of the Brill-Noether curve W^1_{a+2}(C), g(C) = 2a+1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormatArg {
    /// json, csv, markdown or plain
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long = "a-min")]
    a_min: u64,
    #[arg(long = "a-max")]
    a_max: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every invariant for one value of a.
    Invariants {
        #[arg(long = "a")]
        a: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// One row of invariants per a in a range.
    Table {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the identity checks over a range of a.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        /// Restrict to the named check; repeatable.
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Recompute a worked example (genus7 or genus9) and compare.
    Example {
        #[arg(value_parser = parse_example)]
        name: Example,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_check(s: &str) -> Result<String, String> {
    if check_names().contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("valid check names: {}", check_names().join(", ")))
    }
}

fn parse_example(s: &str) -> Result<Example, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Outcome {
    Ok,
    Failed,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(command: Command) -> Result<(String, Outcome), Error> {
    match command {
        Command::Invariants { a, format } => {
            let set = full_invariants(a)?;
            Ok((render_invariants(&set, format.format), Outcome::Ok))
        }
        Command::Table { range, format } => {
            verify::validate_range(range.a_min, range.a_max)?;
            let sets = (range.a_min..=range.a_max)
                .map(full_invariants)
                .collect::<Result<Vec<_>, _>>()?;
            Ok((render_table(&sets, format.format), Outcome::Ok))
        }
        Command::Verify {
            range,
            checks,
            format,
        } => {
            let selected = (!checks.is_empty()).then_some(checks.as_slice());
            let report = verify::run_checks(range.a_min, range.a_max, selected)?;
            eprintln!("{} in {:.2?}", report.summary(), report.elapsed);
            let outcome = if report.all_passed {
                Outcome::Ok
            } else {
                Outcome::Failed
            };
            Ok((render_report(&report, format.format), outcome))
        }
        Command::Example { name, format } => {
            let rows = verify::reproduce_example(name.name())?;
            let outcome = if rows.iter().all(|r| r.matched) {
                Outcome::Ok
            } else {
                Outcome::Failed
            };
            Ok((render_example(name, &rows, format.format), outcome))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((text, outcome)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            match outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Failed => ExitCode::from(1),
            }
        }
        Err(Error::ParameterOutOfRange { .. }) => usage_error(format!("a must be ≥ {MIN_A}")),
        Err(
            err @ (Error::InvalidRange { .. }
            | Error::UnknownCheckName { .. }
            | Error::UnknownExampleName { .. }),
        ) => usage_error(err),
        // arithmetic errors are never expected from the standard formulas
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
