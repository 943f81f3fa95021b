use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Block, crystal and branching combinatorics of Ariki-Koike algebras.
#[derive(Debug, Parser)]
#[command(name = "hecke", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Quantum characteristic: 0 or at least 2 [default: 2]
    #[arg(long, global = true)]
    pub e: Option<i64>,

    /// Level; must match the multicharge length when both are given
    #[arg(long, global = true)]
    pub level: Option<usize>,

    /// Multicharge as a comma list [default: all zeros]
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub kappa: Option<Vec<i64>>,

    /// Output format [default: text]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel scans
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Largest size any enumeration may reach [default: 16]
    #[arg(long, global = true)]
    pub bound: Option<usize>,

    /// key=value file supplying defaults for any long flag
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Induce,
    Restrict,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Content, weight, hub and core data of a block
    BlockInfo(BlockInfoArgs),
    /// The crystal graph up to a size
    Crystal(CrystalArgs),
    /// Graded induction or restriction of a Specht module
    Branch(BranchArgs),
    /// Morita classes of blocks and the criteria-consistency table
    Scopes(ScopesArgs),
    /// Abacus display of a multipartition
    Abacus(AbacusArgs),
}

#[derive(Debug, Args)]
pub struct BlockInfoArgs {
    /// Multipartition as JSON, e.g. "[[2,1],[1]]"
    #[arg(long, conflicts_with = "content")]
    pub mp: Option<String>,

    /// Content as counts per residue ("2,3,1,2") or residue:count pairs
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub content: Option<Vec<String>>,

    /// Also list the members of the block
    #[arg(long)]
    pub members: bool,
}

#[derive(Debug, Args)]
pub struct CrystalArgs {
    #[arg(long)]
    pub nmax: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[arg(long)]
    pub mp: Option<String>,

    #[arg(long, value_enum)]
    pub mode: Option<Mode>,

    /// Restrict to a single residue
    #[arg(long, allow_hyphen_values = true)]
    pub residue: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ScopesArgs {
    #[arg(long)]
    pub nmax: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AbacusArgs {
    #[arg(long)]
    pub mp: Option<String>,

    /// Highest level shown
    #[arg(long, allow_hyphen_values = true)]
    pub top: Option<i64>,

    /// Lowest level shown
    #[arg(long, allow_hyphen_values = true)]
    pub bottom: Option<i64>,
}
