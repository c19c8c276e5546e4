use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ossmax::SolverConfig;

#[derive(Debug, Parser)]
#[command(
    name = "ossmax",
    version,
    about = "Parallel greedy maximization of one-sided smooth functions"
)]
pub struct Cli {
    /// Default directory for generated instances and CSV output.
    #[arg(long, global = true, env = "OSSMAX_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random instance file.
    Generate(GenerateArgs),
    /// Run one solver on one instance and append a CSV row.
    Solve(SolveArgs),
    /// Check the semi-metric, one-sided smoothness and η-local claims.
    Verify(VerifyArgs),
    /// Run every instance × solver × config of a suite file.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveKind {
    Coverage,
    QuadraticSemimetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolytopeKind {
    Box,
    Cardinality,
    MonotoneLinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Jspg,
    Spg,
    Serial,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Jspg => "jspg",
            SolverKind::Spg => "spg",
            SolverKind::Serial => "serial",
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: ObjectiveKind,
    /// Number of coordinates.
    #[arg(long)]
    pub n: usize,
    /// Ground-set size for coverage (default 2n).
    #[arg(long)]
    pub m: Option<usize>,
    /// Probability that a coordinate covers a given element.
    #[arg(long, default_value_t = 0.4)]
    pub density: f64,
    #[arg(long, default_value_t = 0.5)]
    pub weight_min: f64,
    #[arg(long, default_value_t = 2.0)]
    pub weight_max: f64,
    /// Dimension of the points behind a semi-metric instance.
    #[arg(long, default_value_t = 2)]
    pub point_dim: usize,
    #[arg(long, value_enum, default_value_t = PolytopeKind::Box)]
    pub polytope: PolytopeKind,
    /// Cardinality budget (default ⌈n/2⌉).
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub id: Option<String>,
    /// Output file (default `<out-dir>/<id>.json`).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Solver settings; flag names follow the config fields.
#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    /// Smoothness parameter (default: the instance's own claim).
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long, default_value_t = 1e-6)]
    pub delta_tol: f64,
    #[arg(long, default_value_t = 64)]
    pub batch: usize,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0)]
    pub lipschitz: f64,
    #[arg(long, default_value_t = 0.0)]
    pub diameter: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl ConfigArgs {
    pub fn config(&self, claimed_sigma: f64) -> SolverConfig {
        SolverConfig {
            alpha: self.alpha,
            epsilon: self.epsilon,
            eta: self.eta,
            sigma: self.sigma.unwrap_or(claimed_sigma),
            delta_tol: self.delta_tol,
            spg_batch: self.batch,
            noise_theta: self.theta,
            lipschitz: self.lipschitz,
            diameter: self.diameter,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = SolverKind::Jspg)]
    pub solver: SolverKind,
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Grid spacing 1/res for the OPT oracle; skipped when over budget.
    #[arg(long, default_value_t = 10)]
    pub grid_res: usize,
    /// CSV file to append to (default `<out-dir>/runs.csv`).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    /// Claimed smoothness parameter (default: the instance's own claim).
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Also check η-locality with this η.
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub suite: PathBuf,
    /// Output directory (default: the global out-dir).
    #[arg(long)]
    pub out: Option<PathBuf>,
}
