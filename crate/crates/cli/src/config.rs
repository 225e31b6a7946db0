use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Everything needed to reproduce a run. Serialized into every `--json`
/// envelope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub command: Command,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Generate a point set and write it as CSV.
    Gen(GenArgs),
    /// Tabulate freak heights up to an even degree.
    FreakHeights(FreakArgs),
    /// Evaluate the cap-transform eigenvalue λ_k(s).
    Eigenvalue(EigenArgs),
    /// Discrepancy of a point set read from CSV.
    Disc(DiscArgs),
    /// Check zonal cap probabilities against the uniform cap measure.
    VerifyCaps(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    Uniform,
    Planar,
    Zonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DriverArg {
    Vdc,
    Halton,
    Kronecker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Random,
    Fibonacci,
    Kronecker,
    Halton,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "zonal")]
    pub density: DensityKind,
    /// Number of points.
    #[arg(long = "N", short = 'N', default_value_t = 100_000)]
    pub count: usize,
    /// Ambient dimension (points on S^{n−1}).
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Planar arc fraction numerator.
    #[arg(long, default_value_t = 1)]
    pub p: u64,
    /// Planar arc fraction denominator.
    #[arg(long, default_value_t = 3)]
    pub q: u64,
    /// Zonal degree (odd).
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Zonal coefficient in (0, 1).
    #[arg(long, default_value_t = 0.8)]
    pub c: f64,
    /// Zonal axis as comma-separated coordinates; defaults to the last basis vector.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub axis: Option<Vec<f64>>,
    /// Driver for planar/zonal sequences; defaults to vdc (planar) or halton (zonal).
    #[arg(long, value_enum)]
    pub driver: Option<DriverArg>,
    /// Generator for the uniform density.
    #[arg(long, value_enum, default_value = "fibonacci")]
    pub method: MethodArg,
    /// Random seed, or starting index of a deterministic sequence.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct FreakArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "max-degree")]
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EigenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub s: f64,
    /// Gauss–Legendre order; defaults to max(40, 4k).
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ArcFixed,
    CapFixed,
    Circle,
    Telescope,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DiscArgs {
    /// Point set CSV.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub family: Family,
    /// Arc fraction (arc-fixed, telescope).
    #[arg(long)]
    pub a: Option<f64>,
    /// Cap height (cap-fixed).
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<f64>,
    /// Number of grid directions (cap-fixed).
    #[arg(long = "M", short = 'M', default_value_t = 2000)]
    pub directions: usize,
    /// Hill-climb rounds after the grid search (cap-fixed).
    #[arg(long, default_value_t = 20)]
    pub refine: usize,
    /// Number of telescoped arcs (telescope).
    #[arg(long)]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 0.8)]
    pub c: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub s: f64,
    #[arg(long = "M", short = 'M', default_value_t = 200)]
    pub directions: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub axis: Option<Vec<f64>>,
}
