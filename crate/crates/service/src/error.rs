use thiserror::Error;

pub type Result<T, E = ServiceError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("session {0} not found")]
    NotFound(String),

    #[error("session {0} already exists")]
    Conflict(String),

    /// A request or document broke a schema rule or a domain invariant.
    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] argsched_core::Error),

    #[error("storage: {0}")]
    Storage(String),
}

impl From<serde_json::Error> for ServiceError {
    fn from(err: serde_json::Error) -> Self {
        ServiceError::Invalid(err.to_string())
    }
}

impl From<std::io::Error> for ServiceError {
    fn from(err: std::io::Error) -> Self {
        ServiceError::Storage(err.to_string())
    }
}
