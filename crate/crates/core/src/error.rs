use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty domain: {0}")]
    EmptyDomain(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not symplectic: {0}")]
    NotSymplectic(String),
    #[error("parabolic is not relevant: {0}")]
    NotRelevant(String),
    #[error("infeasible pair: {0}")]
    Infeasible(String),
    #[error("direction is not generic: {0}")]
    NonGenericDirection(String),
    #[error("axiom table: {0}")]
    Axioms(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
