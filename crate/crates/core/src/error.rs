use thiserror::Error;

/// Every failure the library can report.
///
/// Input problems (bad literals, wrong dimensions, violated preconditions) are
/// distinguished from internal contradictions via [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse number {0:?}")]
    Parse(String),
    #[error("negative coefficient {0}")]
    NegativeCoefficient(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficients sum to {0}, expected 1")]
    NotNormalized(String),
    #[error("vectors have different sums ({0} vs {1})")]
    SumMismatch(String, String),
    #[error("index {index} outside 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("state has no positive coefficient")]
    ZeroState,
    #[error("source is not majorized by target")]
    NotMajorized,
    #[error("source is not strictly majorized by target")]
    NotStrict,
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("transfer pair ({i}, {j}) is not valid for a compact form with {len} values")]
    BadPair { i: usize, j: usize, len: usize },
    #[error("epsilon {0} outside the order-preserving range")]
    EpsilonOutOfRange(String),
    #[error("majorization has no equality constraints; a two-level auxiliary state suffices")]
    NoEqualityStructure,
    #[error("source and target coincide; there is no lost entanglement to recover")]
    NothingLost,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("witness search failed: {0}")]
    WitnessSearchFailed(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::WitnessSearchFailed(_) | Error::Invariant(_) | Error::ConstructionFailed(_)
        )
    }

    /// Stable machine-readable name used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "Parse",
            Error::NegativeCoefficient(_) => "NegativeCoefficient",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotNormalized(_) => "NotNormalized",
            Error::SumMismatch(..) => "SumMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::ZeroState => "ZeroState",
            Error::NotMajorized => "NotMajorized",
            Error::NotStrict => "NotStrict",
            Error::InvalidState(_) => "InvalidState",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::BadPartition(_) => "BadPartition",
            Error::BadParameters(_) => "BadParameters",
            Error::BadPair { .. } => "BadPair",
            Error::EpsilonOutOfRange(_) => "EpsilonOutOfRange",
            Error::NoEqualityStructure => "NoEqualityStructure",
            Error::NothingLost => "NothingLost",
            Error::ConstructionFailed(_) => "ConstructionFailed",
            Error::WitnessSearchFailed(_) => "WitnessSearchFailed",
            Error::Invariant(_) => "Invariant",
            Error::Input(_) => "Input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
