use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutations live in different symmetric groups (S{0} vs S{1})")]
    RankMismatch(usize, usize),

    #[error("{x} is not below {w} in Bruhat order")]
    NotBelow { x: String, w: String },

    #[error("not a classical embedding of {pattern} into {target}")]
    NotAnEmbedding { pattern: String, target: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("computation exceeded its time budget")]
    Timeout,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
