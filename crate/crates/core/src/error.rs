use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polytope has no basis directions")]
    EmptyBasis,

    #[error("oracle returned a non-finite {what}")]
    NonFinite { what: &'static str },

    #[error("outer loop exceeded {cap} rounds")]
    RoundCapExceeded { cap: usize },

    #[error("grid of {points:.3e} points exceeds the brute-force budget")]
    GridBudget { points: f64 },

    #[error("instance file: {0}")]
    Instance(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
