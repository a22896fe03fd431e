use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semilinear_ast::action::Variant;
use semilinear_ast::ast::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "semilinear-ast",
    version,
    about = "Build and check association schemes on triples from ASL_H(k, n) and AGL_H(k, n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Label every triple and write the partition artifact.
    Build(BuildArgs),
    /// Check the AST conditions on a built spec or an artifact.
    Verify(VerifyArgs),
    /// Print valencies and nonzero intersection numbers.
    Params(ParamsArgs),
    /// Compare closed-form predictions with brute force.
    Crosscheck(ParamsArgs),
    /// Compare two partitions of the same point set.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Asl,
    Agl,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Asl => Variant::Asl,
            VariantArg::Agl => Variant::Agl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegularityArg {
    Full,
    Sampled,
}

#[derive(Clone, Debug, Args)]
pub struct SpecArgs {
    /// Characteristic p.
    #[arg(short = 'p', long = "prime")]
    pub p: Option<u32>,
    /// n = p^alpha.
    #[arg(short = 'a', long = "alpha")]
    pub alpha: Option<u32>,
    /// H fixes GF(p^omega); omega must divide alpha.
    #[arg(short = 'w', long = "omega", default_value_t = 1)]
    pub omega: u32,
    /// Dimension of the vector space.
    #[arg(short = 'k', long = "dim", default_value_t = 2)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Asl)]
    pub variant: VariantArg,
}

#[derive(Clone, Debug, Args)]
pub struct RunArgs {
    /// Labeling threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Principal-regularity mode; defaults to full when n^k <= 64.
    #[arg(long, value_enum)]
    pub regularity: Option<RegularityArg>,
    /// Seed for sampled regularity.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also build the partition by BFS over the group and require equality.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Clone, Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Path of the AST1 partition artifact.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
    /// Write the summary here instead of standard output.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Verify this AST1 artifact instead of building from -p/-a.
    #[arg(long, conflicts_with_all = ["p", "alpha"])]
    pub artifact: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Debug, Args)]
pub struct ParamsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Debug, Args)]
pub struct CompareArgs {
    /// `variant:p:alpha:omega:k` (e.g. `asl:2:2:1:3`) or an AST1 artifact path.
    pub left: String,
    /// Same form as LEFT.
    pub right: String,
    #[arg(long)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}
