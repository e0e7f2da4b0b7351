use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "macpieri", version, about = "Exact Macdonald and interpolation polynomial computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Fix the parameters, e.g. "q=3/7,t=2".
    #[arg(long, global = true, conflicts_with = "symbolic")]
    pub params: Option<String>,

    /// Keep q and t as indeterminates (the default).
    #[arg(long, global = true)]
    pub symbolic: bool,

    /// Replace (q,t) by (1/q,1/t) throughout.
    #[arg(long, global = true)]
    pub inverted: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Threads used for independent targets within one command.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The nonsymmetric Macdonald polynomial E_η.
    E {
        #[arg(long)]
        eta: String,
    },
    /// The interpolation polynomial E*_η.
    Estar {
        #[arg(long)]
        eta: String,
    },
    /// Coefficients of e_r E_η in the twin basis.
    Pieri {
        #[arg(long)]
        eta: String,
        #[arg(long)]
        r: usize,
    },
    /// The generalized binomial coefficient (η over ν).
    Binom {
        #[arg(long)]
        eta: String,
        #[arg(long, alias = "lam")]
        nu: String,
        /// Evaluate through the recursion instead of E*_η(ν̄)/E*_ν(ν̄).
        #[arg(long)]
        recursive: bool,
        /// Position (1-based) used by the recursion.
        #[arg(long, requires = "recursive")]
        k: Option<u32>,
    },
    /// The norm ratio N_η.
    Norm {
        #[arg(long)]
        eta: String,
    },
    /// The coefficient of E_λ in the symmetrization of E_κ.
    Psi {
        #[arg(long)]
        eta: String,
        #[arg(long, alias = "lam")]
        nu: String,
    },
    /// The constant-term inner product <E_η, E_ν> at t = q^k.
    Innerprod {
        #[arg(long)]
        eta: String,
        #[arg(long, alias = "lam")]
        nu: String,
        #[arg(long)]
        k: u32,
    },
    /// Run invariant suites and report the first counterexample.
    Verify {
        /// A suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_mod: u32,
        /// Exponents k of t = q^k for the norm suite.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
        k: Vec<u32>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}
