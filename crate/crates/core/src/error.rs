use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("diagonal variable X[{0},{0}] is not part of the ring")]
    DiagonalVariable(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("permutation {perm} does not fix 1..{k} pointwise")]
    OutsideSubgroup { perm: String, k: usize },

    #[error("coefficient of {perm} is not divisible by its starred monomial")]
    NotStarred { perm: String },

    #[error("n = {n} exceeds the configured limit {limit} for {identity}")]
    LimitExceeded {
        identity: String,
        n: usize,
        limit: usize,
    },

    #[error("{identity} has no instances below n = {min}")]
    DegreeTooSmall { identity: String, min: usize },

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    #[error("singular specialization: {0}")]
    Singular(String),

    #[error("incomplete specialization: missing X[{0},{1}]")]
    MissingValue(usize, usize),
}
