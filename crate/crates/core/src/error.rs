use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ring or field mismatch: {0}")]
    RingMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ideal is not 0-dimensional: {0}")]
    NotZeroDimensional(String),

    #[error("component {0} meets the hyperplane X0 = 0")]
    MeetsHyperplane(usize),

    #[error("characteristic {characteristic} does not exceed the degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: usize },

    #[error("components {0} and {1} share a point")]
    DuplicateComponent(usize, usize),

    #[error("per-point data unavailable: {0}")]
    NoComponentData(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("Hilbert function did not stabilize by degree {0}")]
    StabilizationCap(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::Parse { .. } => "parse",
            Error::InvalidInput(_) => "invalid_input",
            Error::NotZeroDimensional(_) => "not_zero_dimensional",
            Error::MeetsHyperplane(_) => "meets_hyperplane",
            Error::CharacteristicTooSmall { .. } => "characteristic_too_small",
            Error::DuplicateComponent(..) => "duplicate_component",
            Error::NoComponentData(_) => "no_component_data",
            Error::Hypothesis(_) => "hypothesis",
            Error::Unsupported(_) => "unsupported",
            Error::StabilizationCap(_) => "stabilization_cap",
            Error::Internal(_) => "internal",
        }
    }
}
