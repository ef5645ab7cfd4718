use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "quotchi",
    version,
    about = "Euler characteristics of tautological bundles on Quot schemes of curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout. Relative paths resolve
    /// against `$QUOTCHI_OUTPUT_DIR` when it is set.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Oracle guard: largest rank N.
    #[arg(long, default_value_t = 3, global = true)]
    pub max_rank: usize,

    /// Oracle guard: largest degree d.
    #[arg(long, default_value_t = 3, global = true)]
    pub max_d: u32,

    /// Deliberately corrupt a route to exercise the verifier.
    #[arg(long, value_enum, hide = true, global = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flip the sign of the higher-rank determinant at odd d.
    Thm3Sign,
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SymRoute {
    Closed,
    Det,
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Kernel,
    Symfunc,
    Punctual,
    Dual,
    Sym,
    HigherRank,
    Identities,
    Universal,
    All,
}

#[derive(Args, Serialize, Debug, Clone)]
pub struct CurveArgs {
    #[arg(long, default_value_t = 0)]
    pub genus: u32,
    #[arg(long)]
    pub rank: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub deg_e: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub deg_l: i64,
    /// Highest power of q.
    #[arg(long, default_value_t = 6)]
    pub qmax: usize,
}

#[derive(Args, Serialize, Debug, Clone)]
pub struct HigherArgs {
    #[arg(long)]
    pub rank: u32,
    /// Rank of the quotient.
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub deg_l: i64,
    #[arg(long)]
    pub d: u32,
}

#[derive(Args, Serialize, Debug, Clone)]
pub struct SplitArgs {
    /// Splitting type `a_1,...,a_N` of `E` on `P^1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub a: Vec<i64>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub deg_l: i64,
    #[arg(long)]
    pub d: u32,
    /// Torus weights; defaults to `1,...,N`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weights: Option<Vec<i64>>,
}

#[derive(Subcommand, Serialize, Debug, Clone)]
#[serde(untagged)]
pub enum Command {
    /// Generating series of `χ(Quot_d, ∧_y L^[d])`.
    Thm1(CurveArgs),
    /// As `thm1`, twisted by duals of `∧_{x_p} M_p^[d]`.
    Thm2 {
        #[command(flatten)]
        #[serde(flatten)]
        curve: CurveArgs,
        /// Degrees of the line bundles `M_p`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        m: Vec<i64>,
    },
    /// `χ(Quot_d(O^N, r), ∧_y L^[d])` on `P^1`.
    Thm3(HigherArgs),
    /// `χ(Quot_d(O^N, r), det L^[d])` on `P^1`.
    Corollary(HigherArgs),
    /// `χ(Quot_d, Sym_y L^[d])` on `P^1` with `χ(E ⊗ L) = chi`.
    Sym {
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        d: u32,
        /// Highest power of y.
        #[arg(long, default_value_t = 8)]
        ymax: u32,
        #[arg(long, value_enum, default_value_t = SymRoute::Closed)]
        route: SymRoute,
    },
    /// The series `f` with `f^N - f^{N+1} + z = 0`, `f(0) = 1`.
    #[command(name = "universal-f")]
    UniversalF {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 8)]
        zmax: usize,
    },
    /// Universal series B.
    #[command(name = "universal-B")]
    UniversalB {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 6)]
        qmax: usize,
        #[arg(long, default_value_t = 8)]
        ymax: u32,
    },
    /// Universal series A.
    #[command(name = "universal-A")]
    UniversalA {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 6)]
        qmax: usize,
        #[arg(long, default_value_t = 8)]
        ymax: u32,
    },
    /// Localization sum for `∧_y L^[d]`.
    #[command(name = "oracle-exterior")]
    OracleExterior(SplitArgs),
    /// Localization sum for the twisted exterior power.
    #[command(name = "oracle-dual")]
    OracleDual {
        #[command(flatten)]
        #[serde(flatten)]
        split: SplitArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        m: Vec<i64>,
    },
    /// Localization sum for `Sym_y L^[d]`.
    #[command(name = "oracle-sym")]
    OracleSym {
        #[command(flatten)]
        #[serde(flatten)]
        split: SplitArgs,
        #[arg(long, default_value_t = 8)]
        ymax: u32,
    },
    /// Localization sum for the higher-rank Quot scheme.
    #[command(name = "oracle-higher-rank")]
    OracleHigherRank {
        #[command(flatten)]
        #[serde(flatten)]
        higher: HigherArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<i64>>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for randomized parameter sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
