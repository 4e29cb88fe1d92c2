use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nct_core::Group;

#[derive(Debug, Parser)]
#[command(
    name = "nct",
    version,
    about = "Brackets for normal covering numbers of S_n and A_n, family verification and extremal searches"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Search budget in seconds for the whole run; uncertified results are flagged.
    #[arg(long, global = true, env = "NCT_TIME_BUDGET")]
    pub budget: Option<f64>,
    /// Number of worker threads for sweeps. Output order does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallel: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A single degree or a range of degrees.
#[derive(Debug, Clone, Args)]
pub struct Range {
    #[arg(long, conflicts_with_all = ["min", "max"])]
    pub n: Option<u32>,
    #[arg(long)]
    pub min: Option<u32>,
    #[arg(long)]
    pub max: Option<u32>,
    /// Integer stride, `2p` (twice a prime), `prime`, or `2^k`.
    #[arg(long, default_value = "1")]
    pub step: Step,
    #[arg(long, value_enum, default_value_t = Parity::All)]
    pub parity: Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Every(u32),
    TwicePrime,
    Prime,
    PowerOfTwo,
}

impl std::str::FromStr for Step {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "2p" => Ok(Step::TwicePrime),
            "prime" | "p" => Ok(Step::Prime),
            "2^k" | "pow2" => Ok(Step::PowerOfTwo),
            _ => match s.parse::<u32>() {
                Ok(k) if k > 0 => Ok(Step::Every(k)),
                _ => Err(format!(
                    "invalid step {s:?}; expected a positive integer, 2p, prime or 2^k"
                )),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    All,
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::S => Group::Symmetric,
            GroupArg::A => Group::Alternating,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumVariant {
    Coprime,
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CubeVariant {
    Coprime,
    Degenerate,
    DegenerateEven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TripleKind {
    Triples,
    Cubes,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower and upper bounds for the covering number.
    Gamma {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Check built-in covering families.
    Verify {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Family tag such as P21-even or P22; all applicable families if omitted.
        #[arg(long)]
        provenance: Option<String>,
    },
    /// Primitive catalog entries.
    Catalog {
        #[command(flatten)]
        range: Range,
    },
    /// Largest symmetric sum-free sets in Z/n.
    Sumfree {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = SumVariant::Coprime)]
        variant: SumVariant,
    },
    /// Largest symmetric cube-free subsets of 1..n.
    Cubefree {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = CubeVariant::Coprime)]
        variant: CubeVariant,
    },
    /// Exceptional triples and degenerate cubes covered by transitive classes.
    Triples {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = TripleKind::Triples)]
        kind: TripleKind,
    },
    /// Bracket ratios over a sweep of degrees.
    Limits {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Skip the lower-bound search.
        #[arg(long)]
        upper_only: bool,
    },
}
