//! `l1f`: exact sparsest-cut invariants, the verification harness and the
//! extremal tree constructions from the command line.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a verified inequality
//! failed. `L1F_TOL` overrides the tolerance used where eigenvalues are
//! compared with exact values.

mod compute;
mod extremal;
mod input;
mod pool;
mod verify;

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use l1f_core::spectral::SPECTRAL_TOL;

#[derive(Debug, Parser)]
#[command(name = "l1f", version, about = "Exact l1-Fiedler values, cut invariants and extremal trees")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants for each input graph (JSON lines).
    Compute(compute::ComputeArgs),
    /// Check every inequality on a family of graphs.
    Verify(verify::VerifyArgs),
    /// Print a tree attaining one end of a constrained range.
    Extremal(extremal::ExtremalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    InputError,
    VerifyFailed,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(match s {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::VerifyFailed => 2,
        })
    }
}

fn tolerance() -> Result<f64, String> {
    match std::env::var("L1F_TOL") {
        Err(_) => Ok(SPECTRAL_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(format!("L1F_TOL must be a positive number, got {s:?}")),
        },
    }
}

fn run(cli: Cli) -> Result<Status, String> {
    let pool = pool::Pool::new(cli.jobs)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match cli.command {
        Command::Compute(args) => compute::run(args, &pool, &mut out),
        Command::Verify(args) => verify::run(args, &pool, tolerance()?, &mut out),
        Command::Extremal(args) => extremal::run(args, &mut out),
    }?;
    out.flush().map_err(|e| e.to_string())?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(status) => status.into(),
        Err(msg) => {
            eprintln!("error: {msg}");
            Status::InputError.into()
        }
    }
}
