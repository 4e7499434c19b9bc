//! `overpart`: command-line runner for the overpartition congruence checks.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 invalid input or I/O error.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, Parser, Subcommand};
use serde_json::json;

use crate::config::{DEFAULT_AW_ORDER, DEFAULT_COUNT, DEFAULT_ORDER};
use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "overpart",
    version,
    about = "Verify overpartition congruences modulo 5 and 25"
)]
struct Cli {
    /// Also write the full JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print p̄(n).
    Oracle {
        #[arg(long)]
        n: u64,
    },
    /// Check p̄(m·k + t) ≡ 0 (mod u) for 0 ≤ k ≤ count.
    Check {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: u64,
    },
    /// Check one identity from the catalog.
    VerifyIdentity {
        name: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Override the stated modulus; 0 means exact.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Check the progressions of theorem 1 (mod 25) or 2 (mod 5).
    VerifyTheorem {
        number: u8,
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: u64,
    },
    /// Reduce a nine-term sum to its common factor and polynomial.
    VerifyParametrization {
        #[arg(long)]
        lemma: u8,
    },
    /// Check the parametrizations of E_1, E_2, E_4 as power series.
    VerifyAw {
        #[arg(long, default_value_t = DEFAULT_AW_ORDER)]
        order: usize,
    },
    /// Run the finite-check criterion on a tuple config.
    RaduSellers {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run every check and emit one aggregate report.
    All {
        /// Series order for identities (default: each entry's suite order).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Oracle { .. } => "oracle",
            Command::Check { .. } => "check",
            Command::VerifyIdentity { .. } => "verify-identity",
            Command::VerifyTheorem { .. } => "verify-theorem",
            Command::VerifyParametrization { .. } => "verify-parametrization",
            Command::VerifyAw { .. } => "verify-aw",
            Command::RaduSellers { .. } => "radu-sellers",
            Command::All { .. } => "all",
        }
    }

    fn run(&self) -> anyhow::Result<commands::Outcome> {
        match self {
            Command::Oracle { n } => commands::oracle(*n),
            Command::Check {
                m,
                t,
                modulus,
                count,
            } => commands::check(*m, *t, *modulus, *count),
            Command::VerifyIdentity {
                name,
                order,
                modulus,
            } => commands::verify_identity(name, *order, *modulus),
            Command::VerifyTheorem { number, count } => commands::verify_theorem(*number, *count),
            Command::VerifyParametrization { lemma } => commands::verify_parametrization(*lemma),
            Command::VerifyAw { order } => commands::verify_aw(*order),
            Command::RaduSellers { config } => commands::radu_sellers(config),
            Command::All { order, count } => commands::all(*order, *count),
        }
    }
}

fn write_json(path: &PathBuf, report: &RunReport) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match cli.command.run() {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.report
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!("{}", Cli::command().render_usage());
            RunReport::error(
                cli.command.name(),
                json!(format!("{:?}", cli.command)),
                format!("{e:#}"),
            )
        }
    };
    let report = RunReport {
        wall_time: start.elapsed().as_secs_f64(),
        ..report
    };
    if let Some(path) = &cli.json {
        if let Err(e) = write_json(path, &report) {
            eprintln!("error: cannot write {}: {e:#}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.status.exit_code())
}
