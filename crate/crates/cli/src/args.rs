use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mirabolic::Field;

#[derive(Debug, Parser)]
#[command(name = "mirabolic", version, about = "Coadjoint orbits of the mirabolic subgroup")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a functional on p_n read from a JSON file.
    Classify(ClassifyArgs),
    /// Construct named representatives.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Brute-force computations over small prime fields.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Expected field of the input; must match the file.
    #[arg(long)]
    pub field: Option<Field>,
    /// Matrix or functional JSON document.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Complex,
    Real,
}

/// Regular semisimple orbit data.
#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long, value_enum, default_value_t = Case::Complex)]
    pub case: Case,
    /// Scalar field (complex case default gauss, real case default rat).
    #[arg(long)]
    pub field: Option<Field>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Distinct eigenvalues, comma separated (complex case).
    #[arg(long, allow_hyphen_values = true)]
    pub eigen: Option<String>,
    /// Complex pairs `a:b` for eigenvalues a ± ib, comma separated (real case).
    #[arg(long, allow_hyphen_values = true)]
    pub pairs: Option<String>,
    /// Real eigenvalues, comma separated (real case).
    #[arg(long, allow_hyphen_values = true)]
    pub reals: Option<String>,
}

#[derive(Debug, Args)]
pub struct SelectorArgs {
    /// Index list `1,3`, or bitmask `0b101` / `mask:5` (complex case);
    /// real-eigenvalue indices (real case).
    #[arg(long)]
    pub selector: Option<String>,
    /// Pair indices (real case).
    #[arg(long)]
    pub pair_selector: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Machine-readable JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Shift,
    Spectral,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Representative of the open P_n-orbit.
    Open {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "rat")]
        field: Field,
        #[arg(long, value_enum, default_value_t = Variant::Shift)]
        variant: Variant,
        /// Diagonal entries for the spectral variant (default 1..n-1).
        #[arg(long, allow_hyphen_values = true)]
        diag: Option<String>,
        /// Bottom row for the spectral variant (default all ones).
        #[arg(long, allow_hyphen_values = true)]
        row: Option<String>,
    },
    /// The regular semisimple functional of the orbit data.
    Regular {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
    /// The group element attached to a selector.
    Selector {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        sel: SelectorArgs,
    },
    /// Moment image of a selector point and its classification.
    Image {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        sel: SelectorArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Count and classify all P-orbits in a regular semisimple orbit.
    Census {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Stabilizer dimensions for one selector.
    Stabilizer {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        sel: SelectorArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Open-orbit representatives.
    Open {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "rat")]
        field: Field,
        #[command(flatten)]
        out: Output,
    },
    /// Linear-algebra lemmas and random invariance checks.
    Lemmas {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "rat")]
        field: Field,
        #[arg(long, default_value_t = 1000)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Real data classified over the rationals and over Q(i).
    Consistency {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Moment-map fiber over the open orbit point, over F_p.
    Fiber {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Orbit strata against the recursive parameterization of the dual.
    Mackey {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// Exact orbit partition of p_n(F_p)* against the classifier.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Write `orbit_id point_index` lines to this file.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Torus orbits on F_p^n - {0}.
    Torus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Number of 2x2 rotation blocks (0 for the split torus).
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// P-orbits on G(F_p)·diag(a), counted directly.
    Cosets {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: Output,
    },
}
