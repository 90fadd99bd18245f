use thiserror::Error;

/// Errors raised by the library. Out-of-range coefficient indices are not
/// errors: they evaluate to zero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstant,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid direction: {0}")]
    InvalidDirection(&'static str),

    #[error("inexact operation: {0}")]
    Inexact(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}
