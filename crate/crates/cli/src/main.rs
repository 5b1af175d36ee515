//! `wilson-daha`: verification suites, polynomial tables and transforms.
//!
//! Exit codes: 0 pass, 1 check failure, 2 admissibility, 3 parse, 4 tolerance.

mod config;
mod error;
mod output;
mod polys;
mod transform;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use config::{Format, Overrides, RunConfig};
use error::{CliError, CliResult};
use std::path::PathBuf;
use std::process::ExitCode;
use wilson_daha::{Fault, Suite};

#[derive(Parser, Debug)]
#[command(name = "wilson-daha", version, about = "Degenerate DAHA of Wilson type: verification, tables and transforms")]
struct Cli {
    /// TOML or JSON run configuration; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// t0,u0,t1,u1 as rationals, e.g. "2/3,1/5,3/5,1/7".
    #[arg(long, global = true)]
    params: Option<String>,
    /// Working precision in bits.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Tolerance for numeric checks and quadrature values.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    Gamma,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite: algebra, polynomials, transform, wilson-function or all.
    Verify {
        #[arg(value_parser = |s: &str| s.parse::<Suite>())]
        suite: Suite,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Tabulate a polynomial family with exact coefficients.
    GenPolys {
        #[arg(value_enum)]
        family: polys::Family,
        /// Largest index; defaults to max_m from the configuration.
        #[arg(long)]
        max_m: Option<usize>,
    },
    /// Apply a transform to a polynomial or spectral function read from a JSON file.
    Transform {
        #[arg(value_enum)]
        kind: transform::Kind,
        input: PathBuf,
        /// λ points for calF and calFsigma, e.g. 0.5i or 0.2+0.4i; repeatable.
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambdas: Vec<String>,
    },
}

fn load_config(cli: &Cli) -> CliResult<RunConfig> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    cfg.apply(&Overrides {
        params: cli.params.clone(),
        precision: cli.precision,
        tol: cli.tol,
        max_degree: cli.max_degree,
        format: cli.format,
    })?;
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> CliResult<u8> {
    let cfg = load_config(&cli)?;
    let out = cli.out.as_deref();
    match cli.command {
        Command::Verify { suite, inject_fault } => {
            let fault = inject_fault.map(|FaultArg::Gamma| Fault::Gamma);
            let (table, lines, ok) = verify::run(&cfg, suite, fault)?;
            for l in &lines {
                eprintln!("{l}");
            }
            eprintln!("overall: {}", if ok { "pass" } else { "FAIL" });
            table.write(cfg.format, out)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::GenPolys { family, max_m } => {
            polys::run(&cfg, family, max_m.unwrap_or(cfg.max_m))?.write(cfg.format, out)?;
            Ok(0)
        }
        Command::Transform { kind, input, lambdas } => {
            let parsed = transform::read_input(&input)?;
            let grid = if lambdas.is_empty() { cfg.lambda_grid.clone() } else { lambdas };
            let outcome = transform::run(&cfg, kind, parsed, &grid)?;
            outcome.table.write(cfg.format, out)?;
            match outcome.tolerance_failure {
                Some(msg) => Err(CliError::Tolerance(msg)),
                None => Ok(0),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
