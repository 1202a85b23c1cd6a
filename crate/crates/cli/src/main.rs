//! `orebit` — exact skew polynomial arithmetic and orbit certificates.
//!
//! Reads a JSON job document from `--job <file>` or stdin, runs it against
//! the library, prints a JSON report to stdout, and exits with a
//! class-coded status: 0 success, 1 input error, 2 hypothesis unmet,
//! 3 resource ceiling.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use orebit_cli::error::CliError;
use orebit_cli::job::JobSpec;
use orebit_cli::run;

#[derive(Parser)]
#[command(
    name = "orebit",
    about = "Exact arithmetic and dynamics in skew polynomial rings over division rings",
    long_about = None
)]
struct Args {
    /// Job document (JSON); read from stdin when omitted
    #[arg(long)]
    job: Option<PathBuf>,

    /// Override params.seed from the job document
    #[arg(long)]
    seed: Option<u64>,

    /// Override params.max_coeffs (coefficient ceiling for formal powers)
    #[arg(long)]
    max_coeffs: Option<usize>,

    /// Pretty-print the report
    #[arg(long)]
    pretty: bool,
}

fn read_job(args: &Args) -> Result<JobSpec, CliError> {
    let text = match &args.job {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("invalid job document: {e}")))
}

fn execute(args: &Args) -> Result<String, CliError> {
    let spec = read_job(args)?;
    let prepared = spec.prepare(args.seed, args.max_coeffs)?;
    let report = run::run_job(prepared)?;
    let json = if args.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    };
    json.map_err(|e| CliError::input(format!("cannot serialize report: {e}")))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            let body = serde_json::to_string(&err.to_report())
                .unwrap_or_else(|_| format!("{{\"error\":{{\"code\":\"{}\"}}}}", err.code()));
            println!("{body}");
            eprintln!("orebit: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
