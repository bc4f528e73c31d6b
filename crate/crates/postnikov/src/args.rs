use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 0x5eed_2026;

#[derive(Parser, Debug)]
#[command(
    name = "postnikov",
    version,
    about = "Truncation and connectivity certificates on finite models"
)]
pub struct Cli {
    #[command(flatten)]
    pub globals: Globals,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Globals {
    /// Rewrite steps allowed to Tietze simplification of fundamental groups.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub tietze_budget: usize,
    /// Cap on the dimension of constructed simplicial sets.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_dim: usize,
    /// Validation horizon of family schemas.
    #[arg(long, global = true, default_value_t = 12)]
    pub horizon: usize,
    /// Seed of the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl Default for Globals {
    fn default() -> Self {
        Globals {
            tietze_budget: 10_000,
            max_dim: 8,
            horizon: 12,
            seed: DEFAULT_SEED,
        }
    }
}

/// A simplicial set by catalog string or JSON file.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ObjectArg {
    /// Catalog string such as `sphere:2`, `boundary:3`, `torus` or `join:X+Y`.
    #[arg(long)]
    pub object: Option<String>,
    /// JSON document of kind `simplicial`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// An object, or a map in the form `to-point:X`, `id:X`, `from-empty:X` or `boundary-inclusion:n`.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct TargetArg {
    #[arg(long)]
    pub object: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub map: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral homology table.
    Homology {
        #[command(flatten)]
        input: ObjectArg,
        /// Reduced homology.
        #[arg(long)]
        reduced: bool,
    },
    /// Edge-path presentation of the fundamental group, simplified.
    Pi1 {
        #[command(flatten)]
        input: ObjectArg,
        #[arg(long, default_value_t = 0)]
        component: usize,
    },
    /// Certify that an object or map is n-connected.
    CertifyConn {
        #[command(flatten)]
        input: TargetArg,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
    },
    /// Certify that an object is n-truncated.
    CertifyTrunc {
        #[command(flatten)]
        input: ObjectArg,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
    },
    /// Connectivity of the join powers A, A*A, ... at levels k - 2.
    JoinPower {
        #[command(flatten)]
        input: ObjectArg,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Connectivity of X * Y from the connectivities of X and Y.
    JoinTheorem {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Level for X; defaults to its largest certified connectivity.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
    },
    /// Exact computations on finite groupoids.
    #[command(subcommand)]
    Gpd(GpdCommand),
    /// Filters, level classes and germ objects.
    #[command(subcommand)]
    Filter(FilterCommand),
    /// Run a named acceptance suite.
    Suite { name: String },
    /// Validate a JSON document and summarize it.
    Ingest { path: PathBuf },
    /// Print the JSON document of a catalog object.
    Serialize {
        #[command(flatten)]
        input: SerializeArg,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SerializeArg {
    #[arg(long)]
    pub object: Option<String>,
    /// Groupoid catalog string such as `bz:3` or `codiscrete:2`.
    #[arg(long)]
    pub groupoid: Option<String>,
}

/// Functors are `unit:G` (to the point), `id:G`, `diagonal:G`, `trunc0:G`,
/// or a path to a JSON document of kind `functor`. Groupoids are catalog
/// strings or paths to documents of kind `groupoid`.
#[derive(Subcommand, Debug)]
pub enum GpdCommand {
    /// Connectivity and truncation level of a functor.
    Levels {
        #[arg(long)]
        functor: String,
    },
    /// The n-connected / n-truncated factorization.
    Factorize {
        #[arg(long)]
        functor: String,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
    },
    /// Homotopy fiber over a target object.
    Fiber {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        over: usize,
    },
    /// Whether the gap map of f and g is an equivalence, against the
    /// n-connected / n-truncated prediction.
    GapMap {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
    },
    /// Whether X -> X^A is an equivalence.
    IsLocal {
        #[arg(long)]
        object: String,
        #[arg(long)]
        against: String,
    },
}

/// A germ object: a validated family, a constant object, or a JSON document.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GermArg {
    /// `spheres`, `wedges` or `discrete`.
    #[arg(long)]
    pub family: Option<String>,
    /// Constant sequence on a base object; `gpd:` prefixes a groupoid.
    #[arg(long)]
    pub object: Option<String>,
    /// JSON document of kind `const`, `prefix-const` or `family`.
    #[arg(long)]
    pub germ: Option<PathBuf>,
}

/// A germ map: the sphere maps `msphere:i -> point` from a start index, a
/// levelwise constant map, or a periodic list of maps.
#[derive(Args, Debug)]
pub struct GermMapArg {
    #[arg(long, conflicts_with_all = ["map", "cycle", "prefix"])]
    pub spheres_to_point: bool,
    #[arg(long, conflicts_with_all = ["cycle", "prefix"])]
    pub map: Option<String>,
    /// Maps separated by `;`.
    #[arg(long)]
    pub prefix: Option<String>,
    #[arg(long)]
    pub cycle: Option<String>,
    /// First index at which the map is defined.
    #[arg(long, default_value_t = 0)]
    pub start: u64,
}

#[derive(Subcommand, Debug)]
pub enum FilterCommand {
    /// Membership of an index set: `finite:1,2`, `cofinite:1,2`, `from:N`, `below:N` or `periodic:0110/01`.
    Contains {
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
        #[arg(long)]
        set: String,
    },
    /// a = b modulo the filter.
    Eq {
        /// Level class, written as for `--level` of `los-trunc`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// a <= b modulo the filter.
    Le {
        /// Level class, written as for `--level` of `los-trunc`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// a < b modulo the filter.
    Lt {
        /// Level class, written as for `--level` of `los-trunc`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// Truncatedness of a germ object at a level class.
    LosTrunc {
        #[command(flatten)]
        germ: GermArg,
        /// `const:n`, `prefix-const:a,b/n`, `affine:slope,offset[,threshold]`,
        /// `periodic:a,b/c,d` or `seq:a,b/slope:offset;...`.
        #[arg(long)]
        level: String,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// Connectivity of a germ object at a level class.
    LosConn {
        #[command(flatten)]
        germ: GermArg,
        /// `const:n`, `prefix-const:a,b/n`, `affine:slope,offset[,threshold]`,
        /// `periodic:a,b/c,d` or `seq:a,b/slope:offset;...`.
        #[arg(long)]
        level: String,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// Whether a germ map is an equivalence modulo the filter.
    Equivalence {
        #[command(flatten)]
        map: GermMapArg,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
    /// A level class at which tau of a non-equivalence fails to be an equivalence.
    Witness {
        #[command(flatten)]
        map: GermMapArg,
        /// `frechet` or `principal:i,j,..`.
        #[arg(long)]
        filter: String,
    },
}
