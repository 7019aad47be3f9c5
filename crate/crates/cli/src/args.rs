//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polydaehee_core::Rational;

/// Largest order accepted on the command line.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "polydaehee",
    version,
    about = "Exact tables and identity checks for poly-Daehee polynomial families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the members P_0..P_order of a family.
    Table(TableArgs),
    /// Evaluate one member at an exact point.
    Eval(EvalArgs),
    /// Run the identity suite over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family name; see `table --list`.
    #[arg(long, default_value = "gabpdp")]
    pub family: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub k: i32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[arg(long, default_value_t = 0)]
    pub b: u32,
    /// Exact rational, `p` or `p/q`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: Rational,
}

#[derive(Debug, Args)]
pub struct Assignments {
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Specialize these symbols before printing.
    #[command(flatten)]
    pub at: Assignments,
    /// Comma-separated display names for γ, η, ω in text and csv output.
    #[arg(long, value_delimiter = ',')]
    pub names: Option<Vec<String>>,
    /// List the available families instead of printing a table.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Member index.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub at: Assignments,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    /// Only this theorem, e.g. `2.3`. Reductions and anchors are skipped.
    #[arg(long)]
    pub theorem: Option<String>,
    /// Validate λ against this family's factors.
    #[arg(long)]
    pub family: Option<String>,
    /// Restrict the grid; each flag takes one value or a comma list.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub k: Vec<i32>,
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<u32>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<Rational>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
