//! Library side of the `supermagic` binary. [`run`] takes parsed arguments
//! and output sinks and returns the process exit status, so the commands can
//! be driven from tests without spawning a process.

pub mod certificate;
pub mod commands;
pub mod ranges;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use certificate::Certificate;

/// Exit statuses shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Valid = 0,
    Invalid = 1,
    Usage = 2,
    /// A construction failed its own verification.
    Regression = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// Environment variable holding the default search node budget.
pub const NODE_BUDGET_ENV: &str = "SUPERMAGIC_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "supermagic", version, about = "Cycle-supermagic labelings: construct, verify, search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family's constructive labeling, verify it and write a certificate.
    Generate(GenerateArgs),
    /// Re-verify a certificate.
    Verify(VerifyArgs),
    /// Search for labelings of a small graph from scratch.
    Search(SearchArgs),
    /// Compare constructed constants with the closed forms over a grid.
    Sweep(SweepArgs),
    /// Write a family's graph, optionally labeled, as DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyParams {
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
}

impl FamilyParams {
    pub fn given(&self) -> Vec<(&'static str, u32)> {
        [("l", self.l), ("m", self.m), ("n", self.n), ("s", self.s), ("k", self.k)]
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name, v)))
            .collect()
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Certificate path; standard output if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Covering,
    Strict,
}

impl From<ModeArg> for supermagic_core::Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Covering => supermagic_core::Mode::Covering,
            ModeArg::Strict => supermagic_core::Mode::Strict,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    #[arg(long, value_enum, default_value = "covering")]
    pub mode: ModeArg,
    /// Print the full report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Search the triangle K_3.
    #[arg(long, conflicts_with_all = ["family", "edge_list"])]
    pub k3: bool,
    #[arg(long, conflicts_with = "edge_list")]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: FamilyParams,
    /// File with one `u v` edge per line; `#` starts a comment.
    #[arg(long)]
    pub edge_list: Option<PathBuf>,
    /// Cycle length; defaults to the family's.
    #[arg(long)]
    pub cycle: Option<usize>,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Node budget; defaults to $SUPERMAGIC_NODE_BUDGET, else unlimited.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub target: Option<u64>,
    #[arg(long)]
    pub break_symmetry: bool,
    #[arg(long)]
    pub relax_super: bool,
    /// Directory to write one certificate per solution.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: String,
    /// Ranges such as `2..5`, `2,4,6` or `3`; `a..b` is inclusive.
    #[arg(long)]
    pub l: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
    /// Attach the constructive labeling as `label=` attributes.
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    let result = match cli.command {
        Command::Generate(a) => commands::generate(&a, out, err),
        Command::Verify(a) => commands::verify(&a, out, err),
        Command::Search(a) => commands::search(&a, out, err),
        Command::Sweep(a) => commands::sweep(&a, out, err),
        Command::Export(a) => commands::export(&a, out, err),
    };
    match result {
        Ok(status) => status,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.status
        }
    }
}
