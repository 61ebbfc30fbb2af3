use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("capacity exceeded: {what} needs {needed}, cap is {cap}")]
    Capacity { what: String, needed: u64, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),

    #[error("integrality check failed: {0}")]
    NonIntegral(String),

    #[error("modular ranks disagree: {0}")]
    RankDisagreement(String),

    #[error("mixed degrees: expected {expected}, found {found}")]
    MixedDegrees { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn capacity(what: impl Into<String>, needed: u64, cap: u64) -> Self {
        Error::Capacity { what: what.into(), needed, cap }
    }
}
