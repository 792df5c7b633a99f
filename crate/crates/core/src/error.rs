use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid matched pair: {0}")]
    InvalidMatchedPair(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("scale guard: {count} candidates exceed the bound {bound}")]
    ScaleGuard { count: u128, bound: u128 },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
