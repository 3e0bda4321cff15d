use thiserror::Error;

use crate::polyparse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {left} vs {right}")]
    VarSetMismatch { left: String, right: String },
    #[error("substitution assigns {found} values but the polynomial has {expected} variables")]
    IncompleteAssignment { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("target degree {target} is below the total degree {degree}")]
    DegreeTooSmall { target: u32, degree: u32 },
    #[error("expected a homogeneous form of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials are constant in `{0}`")]
    ConstantInVariable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("degenerate cover data: the branch polynomial vanishes identically")]
    DegenerateCover,
    #[error("branch component of multiplicity {0}; a branch divisor allows multiplicities 1 and 2")]
    MultiplicityTooHigh(u32),
    #[error("branch polynomial has projective degree {0}, expected at most 6")]
    BranchDegree(u32),
    #[error("line parametrization must have degree at most 1 and must not be constant")]
    BadParametrization,

    #[error("the ternary cubic is identically zero")]
    DegenerateCubic,
    #[error("discriminant identity violated: {0}")]
    LemmaViolation(String),
    #[error("the cubic curve is singular")]
    NotSmooth,
    #[error("count could not be certified: {0}")]
    IndeterminateCount(String),

    #[error("degenerate torus pair: G2^3 + G3^2 vanishes identically")]
    DegenerateTorus,
    #[error("G2 and G3 share the component {0}")]
    CommonComponent(String),
    #[error("the system has a positive-dimensional solution set (common factor {0})")]
    PositiveDimensional(String),
}
