//! Transport-independent entry points shared by the HTTP API and the CLI.

use std::path::PathBuf;

use argsched_core::{wire, AfJson, AfKind, ExplanationReport, DEFAULT_EXACT_BUDGET};

use crate::error::{Result, ServiceError};
use crate::session::{parse_disturbance, parse_propose_request, parse_session, Session, Solver};
use crate::store::SessionStore;

/// Overrides the exhaustive-search budgets (`m^n` maps, `2^k` subsets).
pub const BUDGET_ENV: &str = "ARGSCHED_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub solver: Solver,
    pub budget: u64,
    pub data_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            solver: Solver::Lpt,
            budget: DEFAULT_EXACT_BUDGET,
            data_dir: None,
        }
    }
}

/// Reads [`BUDGET_ENV`]; `Ok(None)` when unset.
pub fn budget_from_env() -> std::result::Result<Option<u64>, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{BUDGET_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(None),
    }
}

#[derive(Debug)]
pub struct WhatIf {
    config: Config,
    store: SessionStore,
}

impl WhatIf {
    pub fn new(config: Config) -> Result<Self> {
        let store = match &config.data_dir {
            Some(dir) => SessionStore::open(dir)?,
            None => SessionStore::in_memory(),
        };
        Ok(WhatIf { config, store })
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Creates a session from an instance document; returns the session document.
    pub fn create_session(&self, instance: &str, solver: Option<Solver>) -> Result<String> {
        let instance = wire::parse_instance(instance)?;
        let id = uuid::Uuid::new_v4().simple().to_string();
        let solver = solver.unwrap_or(self.config.solver);
        let session = Session::create(id, instance, solver, self.config.budget)?;
        let doc = session.to_json();
        self.store.insert(session)?;
        Ok(doc)
    }

    pub fn propose(&self, id: &str, request: &str) -> Result<ExplanationReport> {
        let req = parse_propose_request(request)?;
        self.store.update(id, |s| s.propose(req))
    }

    pub fn disturb(&self, id: &str, request: &str) -> Result<ExplanationReport> {
        let disturbance = parse_disturbance(request)?;
        self.store.update(id, |s| s.disturb(&disturbance))
    }

    pub fn af(&self, id: &str, kind: &str) -> Result<AfJson> {
        let kind: AfKind = kind.parse().map_err(ServiceError::Invalid)?;
        self.store.read(id, |s| s.af(kind))
    }

    pub fn session(&self, id: &str) -> Result<String> {
        self.store.read(id, |s| Ok(s.to_json()))
    }

    /// The session document; importing it elsewhere restores the same state.
    pub fn export(&self, id: &str) -> Result<String> {
        self.session(id)
    }

    /// Restores an exported session under its own id; returns the id.
    pub fn import(&self, document: &str) -> Result<String> {
        let session = parse_session(document)?;
        let id = session.id().to_string();
        self.store.insert(session)?;
        Ok(id)
    }
}
