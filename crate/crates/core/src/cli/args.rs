use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use crate::registry::{ErrorType, Technology};
use crate::stabverify::{Restriction, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(name = "qecc-advisor", version, about = "Compare, recommend, and verify quantum error-correcting codes")]
pub(crate) struct Cli {
    /// Registry file to use instead of the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    pub registry: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Print filtration traces and other diagnostics.
    #[arg(long, global = true)]
    pub debug: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// Rank the codes that fit a hardware scenario.
    Recommend(RecommendArgs),
    /// Largest distance that fits a qubit budget.
    MaxDistance(MaxDistanceArgs),
    /// List the codes in the registry.
    ListCodes,
    /// Show one code record.
    ShowCode { id: String },
    /// Load a registry file and report the first problem found.
    ValidateRegistry { path: PathBuf },
    /// Check a distance or correctability claim by enumeration.
    Verify(VerifyArgs),
    /// Export benchmark data as CSV or JSON.
    #[command(subcommand)]
    ExportBench(BenchCommand),
}

#[derive(Debug, Args)]
pub(crate) struct RecommendArgs {
    /// Qubit technology (superconducting, trapped-ion, optical, rydberg, nmr, nv-diamond, ising-anyons, simulation).
    #[arg(long)]
    pub qtype: Technology,
    /// Physical qubits available.
    #[arg(long)]
    pub max_qavail: u64,
    /// Logical qubits required.
    #[arg(long, default_value_t = 1)]
    pub qorig: u64,
    /// Whether logical multi-qubit gates are needed.
    #[arg(long, action = ArgAction::Set, value_parser = parse_yes_no, default_value = "no")]
    pub multi_qgate: bool,
    #[arg(long)]
    pub err_type: ErrorType,
    #[arg(long)]
    pub dep_err: f64,
    #[arg(long)]
    pub gate_err: f64,
    #[arg(long)]
    pub read_err: f64,
    /// Print only the first N codes.
    #[arg(long, value_name = "N")]
    pub top: Option<usize>,
    /// JSON file overriding the error and score weights.
    #[arg(long, value_name = "PATH")]
    pub weights: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub(crate) struct MaxDistanceArgs {
    #[arg(long)]
    pub code: String,
    #[arg(long)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub qorig: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum ClaimKind {
    Distance,
    Correctable,
}

#[derive(Debug, Args)]
pub(crate) struct VerifyArgs {
    /// Built-in code name (repetition-3, steane-7, shor-9, bacon-shor-9, rotated-surface-d3).
    #[arg(long, conflicts_with = "code_file", required_unless_present = "code_file")]
    pub code: Option<String>,
    /// JSON file with `name`, `n`, and `generators`.
    #[arg(long, value_name = "PATH")]
    pub code_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub claim: ClaimKind,
    /// Largest weight searched for a distance claim; defaults to n.
    #[arg(long)]
    pub wmax: Option<usize>,
    /// Error weight for a correctability claim.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Restrict errors to X-only or Z-only operators.
    #[arg(long, default_value = "all")]
    pub restrict: Restriction,
    /// Refuse to enumerate more candidates than this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

#[derive(Debug, Subcommand)]
pub(crate) enum BenchCommand {
    /// Qubit overhead against distance.
    Overhead(OverheadArgs),
    /// Threshold of every code plus the uncorrected reference rate.
    Thresholds,
    /// Radar-chart category positions.
    Radar,
    /// Logical error rate against physical error rate.
    Ler(LerArgs),
    /// Required distance against physical error rate.
    RequiredDistance(RequiredDistanceArgs),
}

#[derive(Debug, Args)]
pub(crate) struct OverheadArgs {
    /// Comma-separated code ids; all codes when omitted.
    #[arg(long, value_delimiter = ',')]
    pub codes: Vec<String>,
    #[arg(long, default_value_t = 2)]
    pub d_min: u64,
    #[arg(long, default_value_t = 20)]
    pub d_max: u64,
}

#[derive(Debug, Args)]
pub(crate) struct ModelArgs {
    /// Code whose registry threshold sets p_th.
    #[arg(long, default_value = "surface")]
    pub code: String,
    /// Explicit threshold, overriding --code.
    #[arg(long)]
    pub p_th: Option<f64>,
    /// Prefactor A.
    #[arg(long, default_value_t = crate::benchdata::DEFAULT_PREFACTOR)]
    pub a: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub p_min: f64,
    /// Defaults to p_th.
    #[arg(long)]
    pub p_max: Option<f64>,
    #[arg(long, default_value_t = 21)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub(crate) struct LerArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_delimiter = ',', default_value = "3,5,7,9")]
    pub distances: Vec<u64>,
}

#[derive(Debug, Args)]
pub(crate) struct RequiredDistanceArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_delimiter = ',', default_value = "1e-6,1e-9,1e-12")]
    pub targets: Vec<f64>,
    #[arg(long, default_value_t = 101)]
    pub d_max: u64,
}

fn parse_yes_no(s: &str) -> Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "yes" | "y" | "true" => Ok(true),
        "no" | "n" | "false" => Ok(false),
        other => Err(format!("expected yes or no, got `{other}`")),
    }
}
