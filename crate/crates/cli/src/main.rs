//! `ktgw`: genus-one family Gromov-Witten invariants of the Kodaira-Thurston
//! manifold.
//!
//! Exit codes: 0 success, 1 internal cross-check failure, 2 invalid input.

mod commands;
mod output;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ktgw_core::HomologyClass;

use commands::{Failure, GwMethod, Report};
use output::Format;
use verify::Suite;

const AFTER_HELP: &str = "\
CSV columns (fixed, one header row):
  gw        method,a13,a23,a14,a24,m,n,e134,e234,e124,agrees
  moduli    m,n,d,k,l,aut_k,aut_l,dp_h1..dp_h4,dq_h1..dq_h4,tau1,tau2,theta,
            c0_n2,lambda_period,aut_size,e134,e234,e124,cr_residual,area,regular
  verify    suite,check,passed,failed,ok,first_counterexample
  baseline  l,count_hnf,sigma1,equal
Rationals are written num/den in CSV and text, {num, den} in JSON; integers are
decimal strings in JSON; floating-point fields carry \"approx\": true in JSON.

Exit codes: 0 success, 1 internal cross-check failure, 2 invalid input.";

#[derive(Debug, Parser)]
#[command(
    name = "ktgw",
    version,
    about = "Genus-one family Gromov-Witten invariants of the Kodaira-Thurston manifold",
    after_help = AFTER_HELP
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariant of the class [A13, A23, A14, A24].
    #[command(allow_negative_numbers = true)]
    Gw {
        a13: i64,
        a23: i64,
        a14: i64,
        a24: i64,
        #[arg(long, value_enum, default_value_t = GwMethod::Both)]
        method: GwMethod,
    },
    /// Components of the moduli space in class [m, m, n, n].
    #[command(allow_negative_numbers = true)]
    Moduli { m: i64, n: i64 },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Sweep bound (defaults: identities 200, oracle 8, geometry 4).
        #[arg(long, allow_negative_numbers = true)]
        max: Option<i64>,
    },
    /// Sublattice counts against σ₁ for ℓ = 1..=lmax.
    #[command(allow_negative_numbers = true)]
    Baseline { lmax: i64 },
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Gw {
            a13,
            a23,
            a14,
            a24,
            method,
        } => commands::gw(HomologyClass::new(a13, a23, a14, a24), method),
        Command::Moduli { m, n } => commands::moduli(m, n),
        Command::Verify { suite, max } => verify::verify(suite, max),
        Command::Baseline { lmax } => commands::baseline(lmax),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("warning: could not configure {} worker threads: {e}", cli.jobs);
        }
    }
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if let Err(e) = report.doc.write(cli.format, &mut out).and_then(|_| out.flush()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: writing output: {e}");
                    return ExitCode::from(1);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                if let Some(f) = report.first_failure {
                    eprintln!("check failed: {f}");
                }
                ExitCode::from(1)
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
