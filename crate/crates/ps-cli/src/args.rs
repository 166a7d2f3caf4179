use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pst", version, about = "Splitting types, arrangement numbers and zeta inversion")]
pub struct Cli {
    /// Recompute tables instead of reading PST_CACHE_DIR.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Splitting types of a degree.
    #[command(subcommand)]
    Types(TypesCmd),
    /// Arrangement numbers and their tables.
    #[command(subcommand)]
    Arr(ArrCmd),
    /// Polysymmetric functions.
    #[command(subcommand)]
    Polysym(PolysymCmd),
    /// Zeta inversion and expansion over a chosen ring.
    Zeta(ZetaArgs),
    /// Measures of irreducible hypersurfaces.
    Hyper(HyperArgs),
    /// Inverse Pólya enumeration.
    Polya(PolyaArgs),
    /// Character varieties.
    #[command(subcommand)]
    Charvar(CharvarCmd),
    /// Verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum TypesCmd {
    Enumerate {
        #[arg(long)]
        degree: u32,
        /// Also print the refinement order.
        #[arg(long)]
        poset: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ArrCmd {
    Table {
        #[arg(long)]
        degree: u32,
        /// a, e, ainv, einv or mobius.
        #[arg(long)]
        tag: String,
    },
    Count {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        squarefree: bool,
    },
    Tilings {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        lambda: String,
        /// Draw each arrangement as a grid.
        #[arg(long)]
        render: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolysymCmd {
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// JSON file holding the element.
        #[arg(long)]
        element: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Invert,
    Forward,
}

#[derive(Args, Debug)]
pub struct ZetaArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    /// integers, rationals, motivic, polynomial, trivial, ratfunc, pair or witt.
    #[arg(long)]
    pub ring: String,
    /// JSON file: an array of ring elements, or an object with "values".
    #[arg(long)]
    pub values: PathBuf,
    #[arg(long)]
    pub upto: usize,
}

#[derive(Args, Debug)]
pub struct HyperArgs {
    /// Projective dimension n.
    #[arg(long)]
    pub dim: u32,
    #[arg(long)]
    pub degree: Option<u32>,
    /// motive, count, geometric, euler, rcc, realeuler or stratum-mass.
    #[arg(long)]
    pub measure: String,
    /// Evaluate the polynomial at this q.
    #[arg(long)]
    pub q: Option<String>,
    /// Splitting type for stratum-mass.
    #[arg(long)]
    pub stratum: Option<String>,
}

#[derive(Args, Debug)]
pub struct PolyaArgs {
    /// Comma-separated x_1, x_2, ...
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Vec<String>,
    /// Print u_d as a polynomial in x_1..x_d instead.
    #[arg(long)]
    pub symbolic: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SlMode {
    Epoly,
    Euler,
}

#[derive(Subcommand, Debug)]
pub enum CharvarCmd {
    Transitive {
        #[arg(long)]
        letters: u32,
        #[arg(long)]
        rank: u32,
        /// Also run the brute-force count and compare.
        #[arg(long)]
        oracle: bool,
    },
    Sl {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum)]
        mode: SlMode,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Appendix,
    Figure1,
    Identities,
    Oracles,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 5)]
    pub max_degree: u32,
}
