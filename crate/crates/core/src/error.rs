use thiserror::Error;

/// Failure categories shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: out-of-range vertices, self-loops, bad parameters.
    #[error("input error: {0}")]
    Input(String),
    /// The graph does not have the shape an operation needs (disconnected, not unicyclic).
    #[error("structure error: {0}")]
    Structure(String),
    /// The request exceeds an implementation bound.
    #[error("capability error: {0}")]
    Capability(String),
    /// The request is well-formed but the object it asks about does not exist.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}
