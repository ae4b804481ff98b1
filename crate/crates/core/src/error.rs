use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relation not parallel: {0}")]
    RelationNotParallel(String),
    #[error("not admissible within cap: {0}")]
    NotAdmissible(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("not a tilting module: {0}")]
    NotTilting(String),
    #[error("global dimension is at least {0}, more than 2")]
    GlobalDimensionTooLarge(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
