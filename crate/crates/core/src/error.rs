use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The trailing window of the fitted numerator was not identically zero.
    #[error("h-polynomial did not stabilize: {0}")]
    NotStabilized(String),

    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),

    #[error("second module is not contained in the first")]
    NotSubmodule,

    #[error("monomial ideal is not primary to the maximal ideal: {0}")]
    NotPrimary(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected {expected} variables, got {found}")]
    WrongDimension { expected: usize, found: usize },

    /// Malformed construction input (generators, exponents, matrices).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
