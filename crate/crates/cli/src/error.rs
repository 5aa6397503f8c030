use poisson_pic::Error;
use thiserror::Error as ThisError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A requested check came out false.
    pub const CHECK_FAILED: i32 = 1;
    /// Unreadable input, malformed JSON or polynomials, bad flags.
    pub const PARSE: i32 = 2;
    /// Well-formed input that the computation cannot accept, e.g. a
    /// non-Poisson bivector or a non-homogeneous one for graded cohomology.
    pub const PRECONDITION: i32 = 3;
    /// The engine caught itself in an inconsistency.
    pub const INTERNAL: i32 = 4;
    pub const NOT_INVERTIBLE: i32 = 10;
    pub const NOT_CLOSED: i32 = 11;
    pub const NOT_MEMBER: i32 = 12;
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed problem file: {0}")]
    Json(#[source] serde_json::Error),

    #[error("{0}")]
    Invalid(String),

    #[error("{field}: {source}")]
    Field {
        field: String,
        #[source]
        source: Error,
    },

    #[error(transparent)]
    Engine(#[from] Error),
}

fn engine_code(e: &Error) -> i32 {
    match e {
        Error::DimensionMismatch { .. }
        | Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::BadExponent { .. }
        | Error::InvalidVariables(_)
        | Error::InvalidGrade(_)
        | Error::NotAntisymmetric { .. }
        | Error::UnknownLieAlgebra(_)
        | Error::SingularMatrix => exit::PARSE,
        Error::NotVerified
        | Error::NotPoisson
        | Error::NotHomogeneous
        | Error::JacobiViolation
        | Error::InvalidPair(_)
        | Error::SliceTooLarge { .. }
        | Error::Unsupported(_) => exit::PRECONDITION,
        Error::NotInvertible { .. } => exit::NOT_INVERTIBLE,
        Error::NotClosed => exit::NOT_CLOSED,
        Error::NotMember(_) => exit::NOT_MEMBER,
        Error::Internal(_) => exit::INTERNAL,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Json(_) | CliError::Invalid(_) => exit::PARSE,
            CliError::Field { source, .. } => engine_code(source),
            CliError::Engine(e) => engine_code(e),
        }
    }

    /// Short machine-readable tag for error reports.
    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            exit::PARSE => "parse",
            exit::PRECONDITION => "precondition",
            exit::NOT_INVERTIBLE => "not_invertible",
            exit::NOT_CLOSED => "not_closed",
            exit::NOT_MEMBER => "not_member",
            _ => "internal",
        }
    }
}
