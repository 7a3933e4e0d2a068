mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact type B Eulerian numbers refined by minus signs: tables, identity
/// checks, brute-force oracles, bijections and real-root certificates.
///
/// Exit status: 0 when everything checked passes, 1 on a verification
/// failure, 2 on a usage error.
#[derive(Debug, Parser)]
#[command(name = "seb", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the table of a number or polynomial family at order n.
    ///
    /// A and B print the triangle rows 0..=n. bigB and littleB print rows k,
    /// columns j. P and p print one polynomial per j, Q one per k, and R the
    /// coefficient of x^k y^j in row k, column j; polynomial rows list
    /// coefficients by ascending power.
    ///
    /// The oeis-bfile format lists "index value" lines with the index from 0,
    /// covering every order 0..=n in turn; within an order the table is read by
    /// rows (k outer, j inner) as printed above.
    Table(TableArgs),
    /// Run a verification suite and report every falsified instance.
    Verify(VerifyArgs),
    /// Count signed permutations by exhaustive enumeration.
    ///
    /// With only --n the whole table by (des, neg) is printed; --k and --j
    /// select a row or a cell; --set counts by negative set instead of size.
    Oracle(OracleArgs),
    /// Apply one of the two bijections, or check it exhaustively.
    Bijection(BijectionArgs),
    /// Print exact isolating intervals and interlacing verdicts.
    Roots(RootsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "bigB")]
    BigB,
    #[value(name = "littleB")]
    LittleB,
    #[value(name = "P")]
    BigP,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    #[value(name = "p")]
    LittleP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    #[value(name = "oeis-bfile")]
    OeisBfile,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// recurrences, symmetry, divisibility, worpitzky, parity, logconcavity,
    /// lex, bijections, oracle, series, roots or all.
    pub suite: String,
    /// Largest order checked (series: largest power of z). Ignored by `all`.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Spread independent cells over all available cores.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "set")]
    pub j: Option<i64>,
    /// Negative set, e.g. 1,3 (empty string for the empty set).
    #[arg(long)]
    pub set: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BijectionMap {
    /// F_n from permutations of {1..n+1} to signed permutations of order n.
    Fn,
    /// Relabeling between negative sets U and V of equal size.
    Relabel,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[arg(value_enum)]
    pub map: BijectionMap,
    /// fn: a permutation such as 3,1,2. relabel: a signed permutation such as
    /// 0,2,-1,3 (leading 0 optional).
    #[arg(allow_hyphen_values = true)]
    pub input: Option<String>,
    /// fn only: apply the inverse map to a signed permutation.
    #[arg(long, allow_hyphen_values = true)]
    pub inverse: Option<String>,
    /// relabel: the order n.
    #[arg(long)]
    pub n: Option<usize>,
    /// relabel: source negative set, e.g. 1.
    #[arg(long)]
    pub u: Option<String>,
    /// relabel: target negative set, e.g. 3.
    #[arg(long)]
    pub v: Option<String>,
    /// Check the bijection exhaustively at this order instead.
    #[arg(long)]
    pub verify: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootsFamily {
    #[value(name = "p")]
    LittleP,
    #[value(name = "P")]
    BigP,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long, value_enum, default_value = "p")]
    pub family: RootsFamily,
    #[arg(long)]
    pub n: usize,
    /// A single member of the family; all of them when omitted.
    #[arg(long)]
    pub j: Option<usize>,
    /// Also decide every pairwise interleaver relation.
    #[arg(long)]
    pub check_interlacing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    commands::run(cli.command)
}
