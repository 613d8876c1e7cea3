use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rcm_core::grid::GridShape;

/// Reverse Cuthill-McKee reordering of symmetric sparse matrices.
///
/// Matrices are read as Matrix Market coordinate files. Permutation files hold
/// one line per vertex: line v (0-based) is the new label of vertex v.
#[derive(Debug, Parser)]
#[command(name = "rcm", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an RCM ordering and print a bandwidth/envelope report as JSON.
    Reorder(ReorderArgs),
    /// Print bandwidth and envelope, optionally after applying a permutation.
    Stats(StatsArgs),
    /// Run the simulated grid ordering for several grid sizes and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Seed for the random relabeling applied by --randomize.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Relabel vertices randomly before distributing them over the grid.
    #[arg(long)]
    pub randomize: bool,

    /// Start vertex for the component containing it (0-based).
    #[arg(long)]
    pub start: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReorderArgs {
    /// Matrix Market input.
    #[arg(long)]
    pub input: PathBuf,

    /// Where to write the permutation (line v = new label of vertex v).
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Also write the reordered matrix as Matrix Market.
    #[arg(long)]
    pub permuted_matrix: Option<PathBuf>,

    /// Run on a simulated R x C worker grid (`R` alone means R x R).
    #[arg(long, value_name = "R[xC]")]
    pub grid: Option<GridShape>,

    /// With --grid: write the communication trace as CSV.
    #[arg(long, requires = "grid")]
    pub csv: Option<PathBuf>,

    /// With --grid: write the communication counters as JSON.
    #[arg(long, requires = "grid")]
    pub comm_stats: Option<PathBuf>,

    #[command(flatten)]
    pub run: GridArgs,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Matrix Market input.
    #[arg(long)]
    pub input: PathBuf,

    /// Permutation file to apply before measuring.
    #[arg(long)]
    pub permutation: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Matrix Market input.
    #[arg(long)]
    pub input: PathBuf,

    /// Comma-separated grid list, e.g. `1,2,4` or `2x3,4`.
    #[arg(
        long,
        value_name = "R[xC],...",
        value_delimiter = ',',
        default_value = "1,2,4"
    )]
    pub grid: Vec<GridShape>,

    /// Cost per message in the modeled time.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,

    /// Cost per word in the modeled time.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,

    #[command(flatten)]
    pub run: GridArgs,
}
