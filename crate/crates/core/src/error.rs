use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tensor format: {0}")]
    Format(String),
    #[error("codimension delta[{factor}] = {delta} exceeds n[{factor}] - 1 = {max}")]
    CodimOutOfRange { factor: usize, delta: u32, max: u32 },
    #[error("expected {expected} entries for {what}, got {got}")]
    Arity {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exact identity that must hold did not.
    #[error("internal assertion failed: {0}")]
    Assertion(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl Error {
    /// Whether the error stems from caller input rather than a failed
    /// internal check.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Assertion(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
