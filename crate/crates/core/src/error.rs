use thiserror::Error;

/// Errors raised by the library. Each variant carries a stable short code
/// (see [`Error::code`]) that the command-line front end prints as a prefix.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    #[error("degree sequence admits no pure resolution with integer ranks")]
    NonIntegralBetti,

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("search space exceeds node limit of {limit}")]
    NodeLimit { limit: u64 },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("ideal is not artinian up to degree {0}")]
    NotArtinian(u32),

    #[error("degree cap {given} too small, need at least {needed}")]
    DegreeCapTooSmall { given: u32, needed: u32 },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid degree profile: {0}")]
    InvalidProfile(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Hypothesis(_) => "E_HYPOTHESIS",
            Error::InvalidHVector(_) => "E_HVECTOR",
            Error::NonIntegralBetti => "E_NONINTEGRAL",
            Error::InvalidDegreeSequence(_) => "E_DEGSEQ",
            Error::NodeLimit { .. } => "E_NODE_LIMIT",
            Error::RingMismatch(_) => "E_RING",
            Error::NotHomogeneous(_) => "E_INHOMOGENEOUS",
            Error::Parse { .. } => "E_PARSE",
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::NotArtinian(_) => "E_NOT_ARTINIAN",
            Error::DegreeCapTooSmall { .. } => "E_DEGREE_CAP",
            Error::InvalidMatrix(_) => "E_MATRIX",
            Error::InvalidProfile(_) => "E_PROFILE",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
