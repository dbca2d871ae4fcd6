//! What-if sessions: a solver proposes a baseline, the user proposes alternatives and
//! fixed decisions, and each proposal comes back with its explanation report.
//!
//! [`WhatIf`] holds the operations; [`http::router`] exposes them as a JSON API.

pub mod error;
pub mod http;
pub mod service;
pub mod session;
pub mod store;

pub use error::{Result, ServiceError};
pub use service::{budget_from_env, Config, WhatIf, BUDGET_ENV};
pub use session::{
    parse_disturbance, parse_propose_request, parse_session, Disturbance, Event, HistoryEntry,
    ProposeRequest, ReportSummary, Session, Solver, MAX_ARGUMENTS, MAX_ATTACKS,
};
pub use store::SessionStore;
