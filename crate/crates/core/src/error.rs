use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: u64, bound: u64 },

    #[error("generator map does not extend to a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("coset enumeration exhausted its budget of {budget} cosets")]
    BudgetExhausted { budget: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("error at {pos}: {msg}")]
    Semantic { pos: usize, msg: String },

    #[error("presentation not verified: {0}")]
    UnverifiedPresentation(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for errors that mean "ran out of room" rather than "wrong input".
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::OrderBound { .. } | Error::BudgetExhausted { .. })
    }
}
