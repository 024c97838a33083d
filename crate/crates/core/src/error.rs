use thiserror::Error;

use crate::cubes::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u32, cap: u32 },

    #[error("bit strings longer than {max} are not supported (got {len})")]
    LengthTooLarge { len: u32, max: u32 },

    #[error("invalid bit string {0:?}")]
    Parse(String),

    #[error("{vertex} is not a vertex of {family} of dimension {n}")]
    NotMember {
        vertex: String,
        family: Family,
        n: u32,
    },

    #[error("{upper} / direction {direction} is not an edge of {family}")]
    NotAnEdge {
        upper: String,
        direction: u32,
        family: Family,
    },

    #[error("bit {direction} of {upper} is 0; pass the upper endpoint")]
    DirectionBitNotSet { upper: String, direction: u32 },

    #[error("direction {direction} out of range 1..={n}")]
    DirectionOutOfRange { direction: u32, n: u32 },

    #[error("couple has the wrong side for this map")]
    WrongSide,

    #[error("not an imbalanced couple: {0}")]
    InvalidCouple(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("n = {n} is below the minimum {min} for this operation")]
    NTooSmall { n: u32, min: u32 },

    #[error("{0} is not a Fibonacci string")]
    NotFibonacci(String),

    #[error("{0} is not a non-Fibonacci string")]
    NotNonFib(String),

    #[error("operation not defined for {0}")]
    UnsupportedFamily(Family),

    #[error("edge imbalance {0} exceeds 2")]
    ImbalanceExceedsTwo(u32),

    #[error("internal mismatch in {what}: {detail}")]
    InternalMismatch { what: &'static str, detail: String },
}

pub(crate) fn mismatch(what: &'static str, detail: impl Into<String>) -> Error {
    Error::InternalMismatch {
        what,
        detail: detail.into(),
    }
}
