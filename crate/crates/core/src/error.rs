use thiserror::Error;

/// Errors produced by the algebra, calculus, gauge and cohomology layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("exponent at position {pos} is not a non-negative integer literal")]
    BadExponent { pos: usize },

    #[error("invalid variable names: {0}")]
    InvalidVariables(String),

    #[error("invalid grade: {0}")]
    InvalidGrade(String),

    #[error("bivector has not been verified as Poisson")]
    NotVerified,

    #[error("bivector fails the Jacobi identity")]
    NotPoisson,

    #[error("bivector is not homogeneous; graded cohomology needs a single coefficient degree")]
    NotHomogeneous,

    #[error("2-form is not closed")]
    NotClosed,

    #[error("I + B\u{266d}\u{2218}\u{03c0}\u{266f} is not invertible over polynomials (determinant {det})")]
    NotInvertible { det: String },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("pair is not a gauge-group member: {0}")]
    NotMember(String),

    #[error("pair fails the infinitesimal gauge condition: {0}")]
    InvalidPair(String),

    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("structure constants violate the Jacobi identity")]
    JacobiViolation,

    #[error("unknown Lie algebra `{0}`")]
    UnknownLieAlgebra(String),

    #[error("slice of dimension {dim} exceeds the cap {cap}")]
    SliceTooLarge { dim: usize, cap: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
