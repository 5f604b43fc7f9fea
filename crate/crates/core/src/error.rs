use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root system: {0}")]
    NotARootSystem(String),

    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("weight {0} does not lie in the span of the roots")]
    NotInSpan(String),

    #[error("half-integral weight {0} does not factor through SO(n)")]
    SpinWeight(String),

    #[error("representation dimension {dim} exceeds the multiplicity cap {cap}")]
    CapExceeded { dim: u64, cap: u64 },

    #[error("Weyl group of {label} has more than {cap} elements")]
    WeylGroupTooLarge { label: String, cap: usize },

    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),

    #[error("{0} admits no nontrivial diagram involution")]
    NoInvolution(String),

    #[error("invalid diagram involution: {0}")]
    InvalidInvolution(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),

    #[error("unsupported group for this operation: {0}")]
    UnsupportedGroup(String),

    #[error("pairing of root with cocharacter is not integral: {0}")]
    NonIntegralPairing(String),

    #[error("direction is not regular: {0}")]
    DegenerateDirection(String),

    #[error("folded rank {0} is too large for the numeric oracle")]
    RankTooLarge(usize),

    #[error("invalid character data: {0}")]
    InvalidCharacterData(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical guarantee failed; indicates a bug, not bad input.
    #[error("internal defect: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
