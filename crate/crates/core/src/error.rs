use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in 2..=65521")]
    InvalidPrime(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("not a Hopf algebra: {0}")]
    NotHopf(String),

    #[error("normality violation: {0}")]
    NormalityViolation(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("size guard exceeded: {0}")]
    Resource(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("computation cancelled")]
    Cancelled,
}

impl Error {
    pub(crate) fn dim(expected: usize, found: usize) -> Self {
        Error::Dimension { expected, found }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
