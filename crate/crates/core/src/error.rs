use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid painted tree: {0}")]
    InvalidPaintedTree(String),
    #[error("invalid bitree: {0}")]
    InvalidBitree(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("ambient dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("dimension {n} exceeds the enumeration bound {max} (raise it with DPX_MAX_N)")]
    TooLarge { n: usize, max: usize },
    #[error("series truncated at order {0}, coefficient requested beyond it")]
    Truncated(usize),
    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
