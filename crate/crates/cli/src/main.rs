use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "hyp3f1", version, about = "Evaluate and check a terminating 3F1 polynomial family")]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 128)]
    precision_bits: u32,

    /// Tolerance for classification and curve tracing.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = 30)]
    digits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegimeArg {
    Exterior,
    Interior,
    Segment,
    Endpoint,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print F_n(z).
    Eval {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        /// Gaussian rational such as "1/2-3/4i" or "(1/2, -3/4)".
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Also print the exact value as a Gaussian rational.
        #[arg(long)]
        exact: bool,
        /// Sum in floating point with adaptive precision instead of exactly.
        #[arg(long, conflicts_with = "exact")]
        float: bool,
        /// Largest working precision the float path may use.
        #[arg(long, default_value_t = hyp3f1::hyper::DEFAULT_PRECISION_CEILING)]
        ceiling: u32,
    },
    /// Compare exact values with an asymptotic formula over a range of n.
    Converge {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        /// lo:hi:step, inclusive.
        #[arg(long)]
        n_range: String,
        /// Point iy on the segment (segment and endpoint regimes)
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Point in the plane (exterior and interior regimes)
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Check S + (in/y) I_n = 0 against a threshold.
    Identity {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "1e-20")]
        threshold: String,
    },
    /// Trace the curve |phi| = 1 and write its points.
    Trace {
        #[arg(long, default_value_t = 64)]
        angles: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a point relative to the curve.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options {
        precision: cli.precision_bits,
        tol: cli.tol,
        format: cli.format,
        digits: cli.digits,
    };
    let result = match cli.command {
        Command::Eval { n, alpha, z, exact, float, ceiling } => commands::eval(&opts, n, alpha, &z, exact, float, ceiling),
        Command::Converge { regime, alpha, n_range, y, z } => {
            commands::converge(&opts, regime, alpha, &n_range, y.as_deref(), z.as_deref())
        }
        Command::Identity { n, y, threshold } => commands::identity(&opts, n, &y, &threshold),
        Command::Trace { angles, out } => commands::trace(&opts, angles, out.as_deref()),
        Command::Classify { z } => commands::classify(&opts, &z),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
