mod commands;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "resolvent", version, about = "Exponent atlas, spectral regions and scaling experiments")]
pub struct Cli {
    /// Write output files into this directory instead of printing to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; each command supports a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Slope tolerance for scaling verdicts.
    #[arg(long, global = true, default_value_t = 0.1)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Svg => "svg",
        }
    }
}

/// `d`, `s` and an exponent pair `(x, y) = (1/p, 1/q)`, rationals as `num/den`.
#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[arg(short = 'd', long)]
    pub dim: u32,
    #[arg(short = 's', long, default_value = "2")]
    pub order: String,
    #[arg(short = 'x', long)]
    pub x: String,
    #[arg(short = 'y', long)]
    pub y: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Region label, γ, ω and the active branch of a pair.
    Classify(PairArgs),
    /// γ and its branch report.
    Gamma {
        #[arg(short = 'd', long)]
        dim: u32,
        #[arg(short = 'x', long)]
        x: String,
        #[arg(short = 'y', long)]
        y: String,
    },
    /// Shape and boundary polylines of the spectral region.
    Region {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
        /// Half-width of the square window centred at the origin.
        #[arg(long, default_value_t = 4.0)]
        window: f64,
        /// Samples per polyline.
        #[arg(short = 'n', long, default_value_t = 200)]
        samples: usize,
    },
    /// Shape table over the named points for each `ℓ`.
    Shapes {
        #[arg(short = 'd', long)]
        dim: u32,
        #[arg(short = 's', long, default_value = "2")]
        order: String,
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,2")]
        ell: Vec<f64>,
    },
    /// δ-sweep with a log-log slope fit.
    Scaling {
        #[arg(long, value_enum)]
        experiment: ExperimentArg,
        #[command(flatten)]
        pair: PairArgs,
        /// Comma-separated δ values, strictly decreasing; defaults per experiment.
        #[arg(long, value_delimiter = ',')]
        deltas: Option<Vec<f64>>,
        /// `auto` or an explicit rational exponent.
        #[arg(long, default_value = "auto", allow_hyphen_values = true)]
        expected: String,
    },
    /// Eigenvalues of a discretized `−u'' + V u` against the enclosure.
    Eigenbox {
        #[arg(short = 'x', long)]
        x: String,
        #[arg(short = 'y', long)]
        y: String,
        #[arg(long, default_value_t = 1.0)]
        ell: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        t: f64,
        #[arg(long, default_value = "gaussian")]
        preset: String,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        amplitude: f64,
        #[arg(short = 'n', long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value_t = 20.0)]
        length: f64,
    },
    /// Writes the region gallery and atlas outlines.
    Figures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExperimentArg {
    Knapp,
    Spherical,
    Kernel1d,
}

/// Result of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
