use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("contradictory bracket entry for ({a}, {b}) -> {k}: {existing} vs {new}")]
    Contradiction {
        a: String,
        b: String,
        k: String,
        existing: f64,
        new: f64,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis mismatch between `{0}` and `{1}`")]
    BasisMismatch(String, String),
    #[error("scaling diverges as s -> 0 for [{a}, {b}] -> {k} (exponent {exponent})")]
    DivergentScaling {
        a: String,
        b: String,
        k: String,
        exponent: f64,
    },
    #[error("scaling weights must be finite and nonnegative exponents, got {0}")]
    InvalidScaling(String),
    #[error("unknown signature `{0}`")]
    UnknownSignature(String),
    #[error("mode count must be at least 1")]
    NoModes,
    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("Killing form is singular (rank {rank} < {dim})")]
    SingularKilling { rank: usize, dim: usize },
    #[error("representation carries no orthogonal metric")]
    MetricMissing,
    #[error("quantum constant constraint violated: {0}")]
    Constraint(String),
    #[error("operator is not Hermitian: eigenvalue imaginary part {0:e}")]
    NotHermitian(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("mode index {0} out of range")]
    ModeIndex(usize),
    #[error("signature must be compact for this check")]
    NonCompact,
    #[error("failed to parse algebra file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
