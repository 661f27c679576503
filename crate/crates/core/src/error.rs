use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    /// The input violates a hypothesis of the requested check.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A computed result contradicts a theorem; this indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
