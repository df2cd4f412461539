//! `hopfkernel`: verify, analyze, fuse, bound and dump from a JSON job or
//! inline flags. Exit codes: 0 all checks pass, 1 a check failed, 2 usage or
//! configuration error.

mod commands;
mod config;

use clap::{Parser, Subcommand};
use commands::{Outcome, UsageError};
use config::{Format, JobArgs, JobConfig};
use hopfkernel::report::VerificationReport;
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "hopfkernel", version, about = "Exact verification and analysis of Hopf algebra families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf axioms, relations and (for liftings, with --dual) the dual suite
    Verify(JobArgs),
    /// Blocks, group-likes, Hopf socle, finite type and Loewy lengths
    Analyze(JobArgs),
    /// Fusion rules of the window simples
    Fusion(JobArgs),
    /// Length bounds from category data
    Bounds(JobArgs),
    /// Coproduct tables or structure constants
    Dump(JobArgs),
}

#[derive(Serialize)]
struct Timing {
    millis: u128,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    version: &'static str,
    config: &'a JobConfig,
    status: &'static str,
    checks: &'a [VerificationReport],
    result: &'a serde_json::Value,
    timing: Timing,
}

fn status(checks: &[VerificationReport]) -> &'static str {
    if checks.iter().all(VerificationReport::passed) {
        "pass"
    } else {
        "fail"
    }
}

fn text(report: &Report) -> String {
    let mut s = format!("{} [{}] {}\n", report.command, report.version, report.status.to_uppercase());
    for c in report.checks {
        s += &c.to_string();
    }
    if let Some(claims) = report.result.get("claims").and_then(|c| c.as_array()) {
        for c in claims {
            s += &format!("  {}\n", c.as_str().unwrap_or_default());
        }
    }
    if !report.result.is_null() {
        s += &serde_json::to_string_pretty(report.result).unwrap_or_default();
        s.push('\n');
    }
    s
}

fn run(name: &str, args: &JobArgs, f: fn(&JobConfig) -> Result<Outcome, UsageError>) -> Result<bool, UsageError> {
    let cfg = args.resolve().map_err(UsageError)?;
    let start = Instant::now();
    let out = f(&cfg)?;
    let report = Report {
        command: name,
        version: hopfkernel::VERSION,
        config: &cfg,
        status: status(&out.checks),
        checks: &out.checks,
        result: &out.result,
        timing: Timing {
            millis: start.elapsed().as_millis(),
        },
    };
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &cfg.out {
        std::fs::write(path, format!("{json}\n")).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    let body = match args.format {
        Format::Json => format!("{json}\n"),
        Format::Text => text(&report),
    };
    // a closed pipe is not a check failure
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    Ok(report.status == "pass")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(a) => run("verify", a, commands::verify),
        Command::Analyze(a) => run("analyze", a, commands::analyze),
        Command::Fusion(a) => run("fusion", a, commands::fusion),
        Command::Bounds(a) => run("bounds", a, commands::bounds),
        Command::Dump(a) => run("dump", a, commands::dump),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
