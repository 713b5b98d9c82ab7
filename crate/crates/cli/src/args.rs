use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hdx_core::expansion::DEFAULT_MAX_BITS;
use hdx_core::spectral::{AUDIT_SLACK, DEFAULT_EIGEN_TOLERANCE, MIXING_RESIDUAL_LIMIT};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "hdx",
    version,
    about = "Simplicial complexes, cosystolic expansion and high-order random walks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalFlags,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalFlags {
    /// Treat not-applicable results as failures (exit 1).
    #[arg(long, global = true)]
    pub strict: bool,

    /// Off-diagonal norm at which the eigensolver stops.
    #[arg(long, global = true, default_value_t = DEFAULT_EIGEN_TOLERANCE)]
    pub eigen_tol: f64,

    /// Amount by which an audited inequality may be missed.
    #[arg(long, global = true, default_value_t = AUDIT_SLACK)]
    pub slack: f64,

    /// Largest accepted expander-mixing residual.
    #[arg(long, global = true, default_value_t = MIXING_RESIDUAL_LIMIT)]
    pub mixing_tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a complex document to standard output.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check closure, canonical form and incidence tables of a complex.
    Validate(FileArg),
    /// Normalized adjacency spectrum of the underlying or edge graph.
    Spectrum(GraphArgs),
    /// Exact normalized Cheeger constant, with the Cheeger inequality audit.
    Cheeger(GraphArgs),
    /// Bases and dimensions of the cocycle and coboundary spaces.
    Cocycles(CocyclesArgs),
    /// Exact expansion constants by exhaustive enumeration.
    Certify(CertifyArgs),
    /// Audit the local-view lemmas on one, sampled, or all edge sets.
    Audit(AuditArgs),
    /// Random walk on the edges of a complex, as CSV.
    Walk(WalkArgs),
    /// Full pipeline: regularity, spectrum, certificate, mixing rate, walk audit.
    VerifyTheorem(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// All triangles on `n` vertices.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Complete 1-skeleton on `n` vertices, each triangle kept with probability `p`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct FileArg {
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphChoice {
    /// Underlying graph (1-skeleton).
    G0,
    /// Edge graph.
    G1,
}

#[derive(Debug, Args, Serialize)]
pub struct GraphArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "g0")]
    pub graph: GraphChoice,
}

#[derive(Debug, Args, Serialize)]
pub struct CocyclesArgs {
    pub file: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub dim: u8,
}

#[derive(Debug, Args, Serialize)]
pub struct CertifyArgs {
    pub file: PathBuf,
    /// Largest number of faces of one dimension that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// |E_G1(S, S̄)| equals the sum of local coboundaries.
    Outgoing,
    /// Minimum cut of the underlying graph is at least k0.
    LargeCuts,
    /// Distance of local views to cocycles.
    Distance,
    /// Coboundary bounds of fat, semi-fat and non-fat local views.
    LocalViews,
    /// Sum of coboundaries of local views.
    Sum,
    /// The five lemmas above.
    All,
    /// Expander mixing lemma on the underlying graph.
    Mixing,
    /// Cheeger inequality on the underlying graph.
    CheegerInequality,
    /// Smallest edge-graph eigenvalue is at least -17/18.
    EdgeFloor,
}

#[derive(Debug, Args, Serialize)]
pub struct AuditArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub lemma: Lemma,
    /// Audit this edge set only (comma-separated edge indices).
    #[arg(long, value_delimiter = ',', conflicts_with = "samples")]
    pub set: Option<Vec<usize>>,
    /// Audit this many seeded random edge sets instead of all of them.
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct WalkArgs {
    pub file: PathBuf,
    /// Start edge, as an index or as `u-v`.
    #[arg(long)]
    pub start: String,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exact evolution of the distribution (default).
    #[arg(long, conflicts_with = "paths")]
    pub exact: bool,
    /// Empirical distributions of this many simulated paths.
    #[arg(long)]
    pub paths: Option<u64>,
    /// Rate to compare against: a number, or `auto` for the certified rate.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}
