//! `conevol`: volumes of cone-manifolds along two-bridge knots.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod format;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conevol::KnotFamily;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "conevol",
    version,
    about = "Volumes of hyperbolic and spherical cone-manifolds along two-bridge knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Volume at a single cone angle.
    Volume(VolumeArgs),
    /// Volumes over an evenly spaced angle grid.
    Sweep(SweepArgs),
    /// Critical angle α_K and the collided root.
    CriticalAngle(KnotArgs),
    /// All roots of the cone equation at one angle.
    Roots(RootsArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct KnotArgs {
    /// Knot family: c2n2, c2n3 or c2nm2n.
    #[arg(long)]
    pub family: String,
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VolumeArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    /// Cone angle in radians (degrees with --degrees).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long)]
    pub degrees: bool,
    /// Also compute the Schläfli integral.
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long, default_value_t = conevol::volume::DEFAULT_TOL_QUAD)]
    pub tol_quad: f64,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_start: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_stop: f64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long)]
    pub degrees: bool,
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long, default_value_t = conevol::volume::DEFAULT_TOL_QUAD)]
    pub tol_quad: f64,
    /// Worker threads (default: logical CPUs).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct RootsArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long)]
    pub degrees: bool,
    /// Roots with a larger residual are flagged spurious.
    #[arg(long, default_value_t = conevol::riley::RESIDUAL_TOL)]
    pub tol_root: f64,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Suites to run (default: all).
    #[arg(long, value_enum)]
    pub suite: Vec<verify::Suite>,
    /// Restrict to one family.
    #[arg(long)]
    pub family: Option<String>,
    /// Restrict to one n (default: ±1, ±2).
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Override every suite tolerance.
    #[arg(long)]
    pub tol_root: Option<f64>,
    #[arg(long, default_value_t = conevol::volume::DEFAULT_TOL_QUAD)]
    pub tol_quad: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Failure with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Invalid input or numerical failure (exit 1).
    General(String),
    /// Angle at or beyond the end of the geometric range (exit 2).
    Range(String),
    /// A verification suite failed (exit 3).
    Verify,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::General(format!("I/O error: {e}"))
    }
}

pub fn parse_family(token: &str) -> Result<KnotFamily, Failure> {
    token.parse::<KnotFamily>().map_err(|e| Failure::General(e.to_string()))
}

pub fn to_radians(x: f64, degrees: bool) -> f64 {
    if degrees {
        x.to_radians()
    } else {
        x
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Volume(a) => commands::volume(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::CriticalAngle(a) => commands::critical_angle(&a),
        Command::Roots(a) => commands::roots(&a),
        Command::Verify(a) => verify::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::General(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Range(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    }
}
