use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cyclo(#[from] cyclo::CycloError),
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("non-integral multiplicity at {0}: {1}")]
    NonIntegral(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not in the poset")]
    NotInPoset(u32),
    #[error("missing catalog entry: {0}")]
    MissingCatalogEntry(String),
    #[error("missing matrix model: {0}")]
    MissingModel(String),
    #[error("not supported for even p: {0}")]
    EvenNotSupported(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: i64, got: i64 },
    #[error("not effective: {0}")]
    NotEffective(String),
    #[error("malformed graded data: {0}")]
    MalformedPd(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("data error: {0}")]
    DataError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
