//! Command-line surface of braidlab: per-computation commands and the
//! verification suite.

pub mod commands;
pub mod emit;
pub mod record;
pub mod suite;

use clap::{Args, Parser, Subcommand, ValueEnum};

use emit::Format;
use suite::{DEFAULT_DEGREE, DEFAULT_KMAX, DEFAULT_TRIALS};

#[derive(Debug, Parser)]
#[command(
    name = "braidlab",
    version,
    about = "Exact invariants of braid-like groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; `verify` defaults to text, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "format")]
    pub json: bool,
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for `verify`; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Unlock degree 8 and kmax 6, and run the extended checks.
    #[arg(long, global = true)]
    pub include_extended: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump a presentation as JSON.
    Catalog {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = CatalogKind::Cohomology)]
        kind: CatalogKind,
    },
    /// Hilbert function of the cohomology ring or the enveloping algebra.
    Hilbert {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = HilbertMethod::Cohomology)]
        method: HilbertMethod,
    },
    /// Lower central series ranks.
    Lcs {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = LcsChoice::Enveloping)]
        method: LcsChoice,
    },
    /// Chen ranks.
    Chen {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = ChenChoice::Compare)]
        method: ChenChoice,
    },
    /// First resonance variety.
    Resonance {
        #[arg(long)]
        group: String,
        /// Check every component at generic points.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Random points of H^1 to test for membership.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Recompute every tabulated value in scope and compare.
    Verify {
        /// Comma-separated groups, `all` or `none`.
        #[arg(long, visible_alias = "group", default_value = "all")]
        groups: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogKind {
    Cohomology,
    Gr,
    Group,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HilbertMethod {
    Cohomology,
    Closed,
    Enveloping,
    /// The quadratic dual of the cohomology ring.
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LcsChoice {
    Formula,
    Enveloping,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChenChoice {
    Infinitesimal,
    Fox,
    Closed,
    Compare,
}
