//! Thin batch front end: parses arguments, dispatches to the library
//! command implementations, prints the JSON report (or the --quiet
//! headline), and maps outcomes to exit codes: 0 all checks pass,
//! 1 check failure, 2 usage or parse error, 3 math-domain error.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use nltrace::cli::{
    cmd_check, cmd_falsify, cmd_integral, cmd_major, cmd_norm, cmd_trace, FalsifyMode, GlobalOpts,
    NormFamily, TraceKind,
};

#[derive(Parser)]
#[command(
    name = "nltrace",
    about = "Non-linear traces, induced matrix norms, majorization, and counterexample search",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized commands (check, falsify --mode random)
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Trial count for randomized commands
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    /// Matrix dimension for generated instances
    #[arg(long, global = true, default_value_t = 6)]
    dim: usize,
    /// Override the default tolerance of every check
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Print only the headline value instead of the JSON report
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Choquet- or Sugeno-type trace of a matrix from a file
    Trace {
        matrix: PathBuf,
        weight: PathBuf,
        #[arg(long, value_enum, default_value_t = TraceKind::Choquet)]
        kind: TraceKind,
        /// Accept non-PSD input via the four-part positive decomposition
        #[arg(long)]
        extended: bool,
    },
    /// Discrete Choquet or Sugeno integral of a vector against a measure table
    Integral {
        /// Comma-separated non-negative values, e.g. "5,3,0.5"
        values: String,
        measure: PathBuf,
        #[arg(long, value_enum, default_value_t = TraceKind::Choquet)]
        kind: TraceKind,
    },
    /// Weighted Schatten p-norm, Sugeno norm, or Ky Fan norms of a matrix
    Norm {
        matrix: PathBuf,
        weight: PathBuf,
        #[arg(long, value_enum, default_value_t = NormFamily::Choquet)]
        family: NormFamily,
        #[arg(short, long, default_value_t = 1.0)]
        p: f64,
        /// Rank cutoff for the Ky Fan families
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Eigenvalue domination a <= b with the contraction factorization a = c b c*
    Major { a: PathBuf, b: PathBuf },
    /// Run a named property suite
    Check { suite: String },
    /// Search for a triangle-inequality counterexample for a non-concave weight
    Falsify {
        weight: PathBuf,
        #[arg(short, long, default_value_t = 1.0)]
        p: f64,
        #[arg(long, value_enum, default_value_t = FalsifyMode::Proof)]
        mode: FalsifyMode,
    },
}

fn main() {
    let cli = Cli::parse();
    let opts = GlobalOpts {
        seed: cli.seed,
        trials: cli.trials,
        dim: cli.dim,
        tolerance: cli.tolerance,
    };
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Trace { matrix, weight, kind, extended } => {
            cmd_trace(matrix, weight, *kind, *extended)
        }
        Command::Integral { values, measure, kind } => cmd_integral(values, measure, *kind),
        Command::Norm { matrix, weight, family, p, k } => cmd_norm(matrix, weight, *family, *p, *k),
        Command::Major { a, b } => cmd_major(a, b),
        Command::Check { suite } => cmd_check(suite, &opts),
        Command::Falsify { weight, p, mode } => cmd_falsify(weight, *p, *mode, &opts),
    };
    match outcome {
        Ok((mut report, headline)) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            if cli.quiet {
                println!("{headline}");
            } else {
                println!("{}", report.to_json());
            }
            std::process::exit(if report.passed() { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
