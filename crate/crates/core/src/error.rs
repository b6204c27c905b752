use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("irreps unavailable for {0}")]
    IrrepsUnavailable(String),
    #[error("modules belong to different groups")]
    MixedGroups,
    #[error("Verlinde sum is not a nonnegative integer: {0}")]
    NonIntegralFusion(String),
    #[error("degree bound {bound} too small: {what}")]
    DegreeBound { bound: usize, what: String },
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("normal words are not sorted monomials: {0}")]
    NotPbw(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
