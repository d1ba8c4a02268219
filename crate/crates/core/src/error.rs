use num_bigint::BigUint;
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[allow(missing_docs)]
pub enum Error {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("indices must be strictly increasing (violated at position {position})")]
    NotStrictlyIncreasing { position: usize },

    #[error("index set must not be empty")]
    EmptyIndexSet,

    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {weight} out of range for n = {n}")]
    WeightOutOfRange { weight: usize, n: usize },

    #[error("invalid character {found:?} at position {position} in bit string")]
    InvalidBit { position: usize, found: char },

    #[error("bit string must contain at least one bit")]
    EmptyBitString,

    #[error("expansion has {count} terms, more than the limit of {limit}")]
    TermLimitExceeded { count: BigUint, limit: usize },

    #[error("n = {n} exceeds the oracle bound of {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },

    #[error("ANF coefficient of monomial mask {mask:#x} disagrees with other monomials of the same degree")]
    SymmetryViolation { mask: usize },

    #[error("expected an index set of kind {expected}")]
    WrongKind { expected: crate::IndexKind },

    #[error("cost formula undefined for b = 0 (convention cost is {convention_cost})")]
    UndefinedForZero { convention_cost: u64 },

    #[error("measured {measured} primitive checks but the closed form gives {formula}")]
    CostMismatch { measured: u64, formula: u64 },
}
