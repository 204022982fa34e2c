use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (non-subset, non-basis, clashing labels...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Input is structurally broken before any axiom can be checked.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A presentation failed one of the cyclic-flat axioms.
    #[error("invalid presentation: {0}")]
    Axiom(crate::presentation::Violation),
    /// Work would exceed the exhaustive-search budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// A precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Internal consistency check failed; indicates a bug.
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
