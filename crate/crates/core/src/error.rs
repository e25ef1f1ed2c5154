use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a normalized 2-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("Clifford rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("element is not invertible in the Clifford group")]
    NonInvertible,
    #[error("lifted products are not proportional by a sign at ({0}, {1})")]
    SignMismatch(usize, usize),
    #[error("odd integer {0} where an even one is required")]
    OddDegree(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero entry in a quadratic form")]
    ZeroEntry,
    #[error("cannot factor {0}: cofactor has no prime factor below the trial-division bound")]
    FactorizationLimit(String),
    #[error("polynomial is not separable")]
    Inseparable,
    #[error("polynomial must be monic with nonzero degree")]
    NotMonic,
    #[error("inconsistent Galois descriptor: {0}")]
    InconsistentDescriptor(String),
    #[error("mixed signature ({0}, {1}) cannot come from a Galois algebra over Q")]
    MixedSignature(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
