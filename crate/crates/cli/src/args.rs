use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tck", version, about = "Exact checks for triple covers of the projective plane")]
#[command(args_override_self = true, subcommand_required = false)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[command(flatten)]
    pub global: GlobalOpts,

    /// Run one job per line of FILE, in parallel, printing results in input order.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Swap x0 with the given coordinate before dispatch.
    #[arg(long, value_enum, default_value_t = Chart::X0, global = true)]
    pub chart: Chart,

    /// Seed for randomized coordinate changes.
    #[arg(long, env = "TCK_SEED", global = true)]
    pub seed: Option<u64>,

    /// Random coordinate changes tried before a count is declared uncertain.
    #[arg(long, value_name = "N", global = true)]
    pub retries: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Chart {
    X0,
    X1,
    X2,
}

impl Chart {
    pub fn index(self) -> usize {
        match self {
            Chart::X0 => 0,
            Chart::X1 => 1,
            Chart::X2 => 2,
        }
    }
}

/// One of the three ways to describe a cover. Polynomial values may be `@file`.
#[derive(Debug, Clone, Default, Args)]
pub struct CoverInput {
    /// Ternary cubic in v0, v1, v2 (flag-bundle construction).
    #[arg(long, visible_alias = "cubic", value_name = "POLY", allow_hyphen_values = true)]
    pub flag_cubic: Option<String>,

    /// Quadratic form G2 in x0, x1, x2.
    #[arg(long, value_name = "POLY", allow_hyphen_values = true, requires = "g3")]
    pub g2: Option<String>,

    /// Cubic form G3 in x0, x1, x2.
    #[arg(long, value_name = "POLY", allow_hyphen_values = true, requires = "g2")]
    pub g3: Option<String>,

    /// Raw cover data in u1, u2: four polynomials a, b, c, d.
    #[arg(long, value_name = "POLY", allow_hyphen_values = true, num_args = 4, value_names = ["A", "B", "C", "D"])]
    pub raw: Option<Vec<String>>,
}

#[derive(Debug, Clone, Args)]
pub struct CubicInput {
    /// Ternary cubic in v0, v1, v2.
    #[arg(long, visible_alias = "flag-cubic", value_name = "POLY", allow_hyphen_values = true)]
    pub cubic: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Branch polynomial of a cover and its simple and doubled parts.
    Branch(CoverInput),
    /// Cover data of the flag bundle over a ternary cubic.
    Eta(CubicInput),
    /// Discriminant of the fiber cubic.
    Delta(CubicInput),
    /// Dual curve: the fiber discriminant made squarefree.
    Dual(CubicInput),
    /// Checks that the fiber discriminant is a constant multiple of the branch polynomial.
    VerifyDiscrim(CubicInput),
    /// Classifies a cover and cross-checks the report.
    Classify(CoverInput),
    /// Checks the three normality conditions for a torus pair.
    TorusCheck {
        #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
        g2: String,
        #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
        g3: String,
        /// Sextic to compare against G2^3 + G3^2.
        #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
        delta: Option<String>,
    },
    /// Restricts a cover to an affine line and decides connectivity.
    RestrictLine {
        #[command(flatten)]
        input: CoverInput,
        /// Point on the line, as u1,u2.
        #[arg(long, value_name = "U1,U2", allow_hyphen_values = true)]
        point: String,
        /// Direction of the line, as u1,u2.
        #[arg(long, value_name = "U1,U2", allow_hyphen_values = true)]
        direction: String,
    },
    /// Total branch points of a cover, or the verdict at one point.
    TotalBranch {
        #[command(flatten)]
        input: CoverInput,
        /// Projective point x0:x1:x2 to test.
        #[arg(long, value_name = "X0:X1:X2", allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Jet test for an ordinary cusp.
    CuspCheck {
        /// Ternary cubic whose branch sextic is tested at its rational cusps.
        #[arg(long, visible_alias = "flag-cubic", value_name = "POLY", allow_hyphen_values = true, conflicts_with = "form")]
        cubic: Option<String>,
        /// Plane curve in x0, x1, x2.
        #[arg(long, value_name = "POLY", allow_hyphen_values = true, requires = "at")]
        form: Option<String>,
        /// Projective point x0:x1:x2.
        #[arg(long, value_name = "X0:X1:X2", allow_hyphen_values = true)]
        at: Option<String>,
    },
}
