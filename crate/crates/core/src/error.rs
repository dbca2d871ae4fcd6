use thiserror::Error;

use crate::framework::ArgumentId;
use crate::scheduling::Assignment;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error(
        "assignment ({}, {}) out of bounds for {machines} machines and {jobs} jobs",
        .pair.machine, .pair.job
    )]
    OutOfBounds {
        pair: Assignment,
        machines: usize,
        jobs: usize,
    },

    #[error("duplicate pair ({}, {}) in {field}", .pair.machine, .pair.job)]
    DuplicatePair {
        field: &'static str,
        pair: Assignment,
    },

    #[error("malformed fixed decisions: {0}")]
    MalformedDecisions(String),

    #[error("argument a({}, {}) is not part of the framework", .0.machine, .0.job)]
    ForeignArgument(ArgumentId),

    #[error("resource limit: {what} requires {required} steps, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        budget: u64,
    },

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
