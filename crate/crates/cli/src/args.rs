use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "gorbetti", version, about = "Macaulay bounds, Gorenstein h-vectors and graded Betti numbers")]
pub struct Cli {
    /// Emit JSON instead of tables
    #[arg(long, global = true)]
    pub json: bool,

    /// Prime used wherever a finite field is needed
    #[arg(long, global = true, env = "GORBETTI_MODULUS", default_value_t = 32003)]
    pub modulus: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Binomial expansions and growth bounds
    #[command(subcommand)]
    Macaulay(MacaulayCmd),
    /// O-sequence checks
    #[command(subcommand)]
    Osequence(OsequenceCmd),
    /// Gorenstein h-vector bounds
    #[command(subcommand)]
    Gorenstein(GorensteinCmd),
    /// Hilbert functions, generators and Betti tables of ideal files
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Maximal pfaffian ideals in three variables
    #[command(subcommand)]
    Pfaffian(PfaffianCmd),
    /// Reproduce the worked example
    #[command(subcommand)]
    Paper(PaperCmd),
}

#[derive(Debug, Subcommand)]
pub enum MacaulayCmd {
    /// The degree-J binomial expansion of H
    Rep { h: String, j: u32 },
    /// Largest admissible value in degree J+1 after H in degree J
    Bound { h: String, j: u32 },
}

#[derive(Debug, Subcommand)]
pub enum OsequenceCmd {
    /// Check a sequence given inline (`1 3 6` or `1,3,6`) or as a file
    Check {
        #[arg(required = true, num_args = 1..)]
        values: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GorensteinCmd {
    /// Largest number of degree-P generators
    Nu0 { g: u32, p: u32 },
    /// The extremal h-vector, its multiplicity and pure Betti numbers
    Extremal { g: u32, p: u32 },
    /// Generator counts excluded by one-step growth
    Forbidden { g: u32, p: u32 },
    /// All symmetric O-sequences up to socle degree SMAX
    Enumerate {
        g: u32,
        p: u32,
        smax: u32,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
        /// Print every h-vector, not only the summary
        #[arg(long)]
        list: bool,
    },
    /// Rational certificate that H in degree J cannot reach the target
    Certificate { g: u32, p: u32, j: u32, h: String },
    /// Scan for increases of the growth bound in J
    Monotonic { hmax: u64, jmin: u32, jmax: u32 },
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Ideal file (`ring n N char Q` header, one polynomial per line)
    pub file: PathBuf,
    /// Coefficient field: a prime, or 0 / q for the rationals; defaults to the file header
    #[arg(long = "char")]
    pub characteristic: Option<String>,
    /// Largest degree searched when testing whether the quotient is artinian
    #[arg(long, default_value_t = 64)]
    pub search_cap: u32,
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// Hilbert function of the quotient
    Hf {
        #[command(flatten)]
        input: IdealInput,
        /// Last degree; defaults to socle degree + 1
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Graded Betti numbers of the quotient
    Betti {
        #[command(flatten)]
        input: IdealInput,
        /// Last internal degree; defaults to socle degree + number of variables
        #[arg(long)]
        jmax: Option<u32>,
        /// Also run the Gorenstein symmetry checks
        #[arg(long)]
        gorenstein: bool,
    },
    /// Number of minimal generators in each degree
    Mingens {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Degreewise dimensions of the colon ideal (I : f)
    Colon {
        #[command(flatten)]
        input: IdealInput,
        /// Homogeneous divisor, e.g. `x1*x2 - x3*x4`
        #[arg(long)]
        by: String,
        #[arg(long)]
        dmax: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum PfaffianCmd {
    /// Random alternating matrix with linear entries and its pfaffian ideal
    Demo {
        nu: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Random trials of the generator bound for codimension-3 ideals
    Experiment {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Generator degree profile, e.g. `2,2,2,3,3`; repeatable; defaults to a built-in set
        #[arg(long = "profile")]
        profiles: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PaperCmd {
    /// Hilbert function, generators and Betti diagram of the built-in example
    Example1,
}
