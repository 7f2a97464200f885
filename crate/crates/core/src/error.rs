use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring spec: {message} (token `{token}` at position {position})")]
    RingSyntax {
        token: String,
        position: usize,
        message: String,
    },
    #[error("ring has no components")]
    EmptyRing,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("nilpotency index must be at least 1")]
    ZeroNilpotency,
    #[error("ring of size {size} exceeds the supported maximum {max}")]
    RingTooLarge { size: u64, max: u64 },
    #[error("element index {index} out of range for ring of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("component value out of range: {0}")]
    ComponentOutOfRange(String),
    #[error("exponent vector {0:?} is not an ideal representative of this ring")]
    BadExponent(Vec<u32>),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("poset has no least element")]
    NoLeastElement,
    #[error("poset has no greatest element")]
    NoGreatestElement,
    #[error("weight table has no value for ideal {0}")]
    MissingWeightKey(String),
    #[error("weight must vanish on the zero ideal")]
    NonzeroAtZero,
    #[error("function is not invariant under unit multiplication")]
    NotInvariant,
    #[error("eta is undefined for the zero ideal")]
    ZeroIdealEta,
    #[error("weight file: {0}")]
    WeightFile(String),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("map is not a w-isometry")]
    NotIsometry,
    #[error("invalid code or map: {0}")]
    InvalidCode(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
