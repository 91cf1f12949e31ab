use thiserror::Error;

/// Errors surfaced by ring constructors, operators and file parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime: {0} is not prime")]
    NotPrime(u64),

    #[error("ring parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("operation requires a rank-1 Novikov ring, got rank {0}")]
    RankNotOne(usize),

    #[error("truncation bound {requested} exceeds the ring bound {bound}")]
    BoundExceeded { requested: u64, bound: u64 },

    #[error("t-degree {degree} exceeds the computation cap {cap}")]
    TDegreeOverflow { degree: u32, cap: u32 },

    #[error("matrix of quantum multiplication is not graded: entry ({row},{col}) connects degree {from} to {to}")]
    GradingViolation {
        row: usize,
        col: usize,
        from: u32,
        to: u32,
    },

    #[error("internal: theta component left over in a p-curvature column (component {component})")]
    ThetaResidue { component: usize },

    #[error("internal: t^{power} term left over in a p-curvature column (component {component})")]
    TPowerResidue { component: usize, power: u32 },

    #[error("closed form and recursion need p >= 5, got p = {0}")]
    UnsupportedPrime(u64),

    #[error("recursion needs a divisor weight nonzero mod p")]
    UnsupportedWeight,

    #[error("covariant constancy system is inconsistent at {0}")]
    Inconsistency(String),

    #[error("pairing matrix is degenerate")]
    DegeneratePairing,

    #[error("BPS inversion is non-integral at degree {degree}")]
    NonIntegralBps { degree: u32 },

    #[error("{field}: {message}")]
    InvalidInput { field: String, message: String },
}

impl Error {
    pub(crate) fn invalid(field: &str, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.to_string(),
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(message: impl Into<String>) -> Self {
        Error::ParameterMismatch(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
