use thiserror::Error;

use crate::roots::Family;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}: {reason}")]
    InvalidType {
        family: Family,
        rank: usize,
        reason: &'static str,
    },

    #[error("coefficient vector {0:?} is not a root of this root system")]
    NotARoot(Vec<i32>),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("enumerating {what} needs {size} elements, above the bound {bound}")]
    BoundExceeded {
        what: String,
        size: u128,
        bound: u128,
    },

    #[error("element {word} is not J-admissible for J = {j}")]
    NotAdmissible { word: String, j: String },

    #[error("element {0} is not a shortest right coset representative for W_J")]
    NotMinimalRepresentative(String),

    #[error("operation requires an ambient root system of type A")]
    NotTypeA,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid Weyl group word: {0}")]
    InvalidWord(String),

    #[error("component {0} is not canonically labelled")]
    NonCanonicalLabelling(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("the flag u1*w*B is not a point of the Hessenberg variety")]
    PointNotInVariety,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("oracle is limited to n <= {bound}, got n = {n}")]
    OracleBound { n: usize, bound: usize },

    #[error("polynomial expansion is only defined for cohomology classes")]
    ExpansionNeedsCohomology,

    #[error("no shared-linear-term table row for {0}")]
    NoTableRow(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
