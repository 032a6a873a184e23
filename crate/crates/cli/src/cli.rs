use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "jack", version, about = "Exact Jack superpolynomials, their ideals and clustering properties")]
pub struct Cli {
    /// key=value configuration file
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Cache directory (overrides SUPERJACK_CACHE and the config file)
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Output format (default: pretty, or `out` from the config file)
    #[arg(long, global = true, value_enum)]
    pub out: Option<OutFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Monomial symmetric functions
    M,
    /// Explicit polynomial in x and theta
    Vars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Span of admissible Jack superpolynomials at alpha_{k,r}
    #[value(name = "I", alias = "i")]
    I,
    /// Superpolynomials vanishing when k+1 variables coincide
    #[value(name = "F", alias = "f")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Sekiguchi,
    Norm,
    Duality,
    Pieri,
    Stability,
    Vanishing,
    Cochain,
    #[value(name = "conjecture-IF")]
    ConjectureIf,
    #[value(name = "conjecture-rma")]
    ConjectureRma,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand P_Λ on the monomial basis or as an explicit polynomial
    Compute {
        /// Superpartition, e.g. "1,0;2" or "(2o,2,0o)"
        #[arg(long)]
        spart: String,
        #[arg(long = "N", value_name = "N")]
        nvars: usize,
        /// `sym` for Q(alpha), or a rational such as -3/2
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value = "m")]
        basis: Basis,
    },
    /// Coefficients of an operator applied to P_Λ, from the hook formulas
    Pieri {
        /// pt0, q, q_perp, Q or Q_perp
        #[arg(long)]
        op: String,
        #[arg(long)]
        spart: String,
        #[arg(long = "N", value_name = "N")]
        nvars: usize,
        /// Also apply the operator directly and compare
        #[arg(long)]
        check: bool,
    },
    /// Operators on superpolynomials
    Op {
        #[command(subcommand)]
        action: OpAction,
    },
    /// Hilbert series of the ideal or of the vanishing space
    Characters {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        k: usize,
        /// Only for --space I
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long = "N", value_name = "N")]
        nvars: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Run a verification suite; exit status 1 if it finds a counterexample
    Verify(VerifyArgs),
    /// List superpartitions of a degree, optionally only admissible ones
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Fermionic degree; all if omitted
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "N", value_name = "N")]
        nvars: usize,
        /// Keep only (k,r,N)-admissible labels (needs --r)
        #[arg(long, requires = "r")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        r: Option<usize>,
    },
    /// Order of the zero of the prescribed-symmetry polynomial at a cluster
    Cluster {
        #[arg(long)]
        spart: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "N", value_name = "N")]
        nvars: usize,
        /// 1-based indices of the k clustered variables
        #[arg(long, value_delimiter = ',')]
        cluster: Vec<usize>,
        #[arg(long)]
        primed: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OpAction {
    /// Apply an operator to a JSON term list
    Apply {
        /// D, Delta, Cherednik(i), K(i,j), nabla, nabla_perp, q, q_perp, Q,
        /// Q_perp, E, calE, q_tilde, L(n), G(r), p(n), pt(n)
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        alpha: String,
        /// JSON term list; `-` reads standard input
        #[arg(long)]
        input: PathBuf,
        /// Number of variables; defaults to the exponent length
        #[arg(long = "N", value_name = "N")]
        nvars: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long = "N", value_name = "N")]
    pub nvars: Option<usize>,
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Largest fermionic degree (sekiguchi, pieri)
    #[arg(long)]
    pub mmax: Option<usize>,
    /// Differential for the cochain suite: q or q_tilde (both if omitted)
    #[arg(long)]
    pub d: Option<String>,
    /// Append exception rows of conjecture-rma to this file
    #[arg(long)]
    pub log: Option<PathBuf>,
}
