use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid signature (m|n) = ({m}|{n}): m + n must be positive")]
    InvalidSignature { m: usize, n: usize },

    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{0} is not an ({1}|{2})-hook partition")]
    NotHook(String, usize, usize),

    #[error("sets are not disjoint: label {0} occurs in both")]
    Overlap(usize),

    #[error("expected plain symbols only, found `{0}`")]
    ColoredSymbol(String),

    #[error("integrality violation: {0}")]
    Integrality(String),

    #[error("divided power e^({t}) of an odd derivation is undefined for t >= 2")]
    OddDividedPower { t: usize },

    #[error("characteristic must be an odd prime, got {0}")]
    BadCharacteristic(u64),

    #[error("basis is linearly dependent (rank {rank} < {len})")]
    DependentBasis { rank: usize, len: usize },

    #[error("no representative of the class lies in I^+")]
    NoPositiveRepresentative,

    #[error("straightening failed: {0}")]
    Straightening(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
