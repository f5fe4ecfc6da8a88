use alloc::string::String;

/// Errors raised by the group, character-table and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("image array is not a bijection on 1..{degree}")]
    NotBijective { degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("group order overflows u64")]
    OrderOverflow,
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("builtin validation failed: {0}")]
    ValidationFailed(String),
    #[error("no prime congruent to 1 mod {exponent} above {floor} within the search bound")]
    NoLiftingPrime { exponent: u64, floor: u64 },
    #[error("eigenspace splitting failed: {0}")]
    SplittingFailed(String),
    #[error("degree lift failed: {0}")]
    DegreeLift(String),
    #[error("non-integral codegree for character {index}")]
    NonIntegralCodegree { index: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;
