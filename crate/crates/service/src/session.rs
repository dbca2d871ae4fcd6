//! Session state and the what-if operations on it, independent of any transport.

use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use argsched_core::{
    build_feasibility_af, build_fixed_decision_af, build_optimality_af, compute_metrics,
    exact_optimal, explain_schedule, is_feasible, lpt_schedule, search_space, AfJson, AfKind,
    ExplanationReport, FixedDecisions, Instance, Schedule,
};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ServiceError};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    #[default]
    Lpt,
    Exact,
}

impl Solver {
    pub fn as_str(self) -> &'static str {
        match self {
            Solver::Lpt => "lpt",
            Solver::Exact => "exact",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Solver {
    type Err = ServiceError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lpt" => Ok(Solver::Lpt),
            "exact" => Ok(Solver::Exact),
            other => Err(ServiceError::Invalid(format!(
                "unknown solver {other:?}, expected \"lpt\" or \"exact\""
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Event {
    Created,
    Proposed,
    Disturbance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSummary {
    pub feasible: bool,
    pub efficient: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_ok: Option<bool>,
    pub explanations: usize,
}

impl From<&ExplanationReport> for ReportSummary {
    fn from(r: &ExplanationReport) -> Self {
        ReportSummary {
            feasible: r.feasible,
            efficient: r.efficient,
            fixed_ok: r.fixed_ok,
            explanations: r.explanations.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HistoryEntry {
    pub timestamp_ms: u64,
    pub event: Event,
    pub summary: ReportSummary,
}

/// Body of a propose call. Omitted fields keep the session's current values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProposeRequest {
    #[serde(default)]
    pub schedule: Option<Schedule>,
    #[serde(default)]
    pub decisions: Option<FixedDecisions>,
}

/// Shortcuts for common disruptions, expanded into negative decisions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Disturbance {
    /// Machines that can take no job, e.g. a nurse falling ill.
    #[serde(default)]
    pub unavailable_machines: Vec<usize>,
    /// Jobs that may run nowhere.
    #[serde(default)]
    pub cancelled_jobs: Vec<usize>,
}

impl Disturbance {
    pub fn to_decisions(&self, inst: &Instance) -> Result<FixedDecisions> {
        let mut d = FixedDecisions::default();
        for &machine in &self.unavailable_machines {
            d = d.merge(&FixedDecisions::machine_unavailable(inst, machine)?)?;
        }
        for &job in &self.cancelled_jobs {
            d = d.merge(&FixedDecisions::job_cancelled(inst, job)?)?;
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SessionDocument")]
pub struct Session {
    id: String,
    solver: Solver,
    instance: Instance,
    baseline: Schedule,
    #[serde(skip_serializing_if = "Option::is_none")]
    proposal: Option<Schedule>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decisions: Option<FixedDecisions>,
    history: Vec<HistoryEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SessionDocument {
    id: String,
    solver: Solver,
    instance: Instance,
    baseline: Schedule,
    #[serde(default)]
    proposal: Option<Schedule>,
    #[serde(default)]
    decisions: Option<FixedDecisions>,
    history: Vec<HistoryEntry>,
}

impl TryFrom<SessionDocument> for Session {
    type Error = String;

    fn try_from(doc: SessionDocument) -> std::result::Result<Self, String> {
        if !valid_id(&doc.id) {
            return Err(format!(
                "id: {:?} must be 1 to 64 ASCII letters, digits, '-' or '_'",
                doc.id
            ));
        }
        let inst = &doc.instance;
        check_size(inst).map_err(|e| format!("instance: {e}"))?;
        inst.check_schedule(&doc.baseline)
            .map_err(|e| format!("baseline: {e}"))?;
        if !is_feasible(inst, &doc.baseline).map_err(|e| format!("baseline: {e}"))? {
            return Err("baseline: must assign every job to exactly one machine".into());
        }
        if let Some(s) = &doc.proposal {
            inst.check_schedule(s)
                .map_err(|e| format!("proposal: {e}"))?;
        }
        if let Some(d) = &doc.decisions {
            inst.check_decisions(d)
                .map_err(|e| format!("decisions: {e}"))?;
        }
        if doc
            .history
            .windows(2)
            .any(|w| w[0].timestamp_ms > w[1].timestamp_ms)
        {
            return Err("history: timestamps must be non-decreasing".into());
        }
        Ok(Session {
            id: doc.id,
            solver: doc.solver,
            instance: doc.instance,
            baseline: doc.baseline,
            proposal: doc.proposal,
            decisions: doc.decisions,
            history: doc.history,
        })
    }
}

/// Largest instance a session accepts. Framework size grows with the `n·m·(m−1)`
/// feasibility attacks, and a request must not be able to exhaust memory.
pub const MAX_ARGUMENTS: u64 = 100_000;
pub const MAX_ATTACKS: u64 = 4_000_000;

pub fn check_size(inst: &Instance) -> std::result::Result<(), String> {
    let (m, n) = (inst.machines() as u64, inst.jobs() as u64);
    let arguments = m.checked_mul(n);
    let attacks = arguments.and_then(|a| a.checked_mul(m - 1));
    if m > MAX_ARGUMENTS || arguments.is_none_or(|a| a > MAX_ARGUMENTS) {
        return Err(format!(
            "{m} machines and {n} jobs exceed the limit of {MAX_ARGUMENTS} arguments"
        ));
    }
    if attacks.is_none_or(|a| a > MAX_ATTACKS) {
        return Err(format!(
            "{m} machines and {n} jobs exceed the limit of {MAX_ATTACKS} attacks"
        ));
    }
    Ok(())
}

/// Ids double as file names, so only a conservative alphabet is accepted.
pub fn valid_id(id: &str) -> bool {
    (1..=64).contains(&id.len())
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_')
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

impl Session {
    /// Solves `instance` for a baseline. `Solver::Exact` falls back to LPT when the
    /// search space exceeds `budget`; [`Session::solver`] records which one ran.
    pub fn create(id: String, instance: Instance, solver: Solver, budget: u64) -> Result<Self> {
        if !valid_id(&id) {
            return Err(ServiceError::Invalid(format!(
                "id: {id:?} is not a valid id"
            )));
        }
        check_size(&instance).map_err(|e| ServiceError::Invalid(format!("instance: {e}")))?;
        let within_budget = search_space(&instance).is_some_and(|space| space <= budget);
        let (solver, baseline) = match solver {
            Solver::Exact if within_budget => (Solver::Exact, exact_optimal(&instance, budget)?.0),
            _ => (Solver::Lpt, lpt_schedule(&instance)),
        };
        let report = explain_schedule(&instance, &baseline, None)?;
        Ok(Session {
            id,
            solver,
            instance,
            baseline,
            proposal: None,
            decisions: None,
            history: vec![HistoryEntry {
                timestamp_ms: now_ms(),
                event: Event::Created,
                summary: ReportSummary::from(&report),
            }],
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn solver(&self) -> Solver {
        self.solver
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn baseline(&self) -> &Schedule {
        &self.baseline
    }

    pub fn baseline_cmax(&self) -> u64 {
        compute_metrics(&self.instance, &self.baseline)
            .map(|m| m.cmax)
            .unwrap_or(0)
    }

    pub fn proposal(&self) -> Option<&Schedule> {
        self.proposal.as_ref()
    }

    pub fn decisions(&self) -> Option<&FixedDecisions> {
        self.decisions.as_ref()
    }

    pub fn history(&self) -> &[HistoryEntry] {
        &self.history
    }

    /// Explains the requested schedule (else the current proposal, else the baseline)
    /// under the requested decisions (else the current ones). State changes only on success.
    pub fn propose(&mut self, req: ProposeRequest) -> Result<ExplanationReport> {
        self.apply(req, Event::Proposed)
    }

    /// Adds the disturbance's negative decisions to the current ones and re-explains.
    pub fn disturb(&mut self, disturbance: &Disturbance) -> Result<ExplanationReport> {
        let extra = disturbance.to_decisions(&self.instance)?;
        let decisions = match &self.decisions {
            Some(d) => d.merge(&extra)?,
            None => extra,
        };
        let req = ProposeRequest {
            schedule: None,
            decisions: Some(decisions),
        };
        self.apply(req, Event::Disturbance)
    }

    fn apply(&mut self, req: ProposeRequest, event: Event) -> Result<ExplanationReport> {
        let schedule = req
            .schedule
            .or_else(|| self.proposal.clone())
            .unwrap_or_else(|| self.baseline.clone());
        let decisions = req.decisions.or_else(|| self.decisions.clone());
        self.instance.check_schedule(&schedule)?;
        if let Some(d) = &decisions {
            self.instance.check_decisions(d)?;
        }
        let report = explain_schedule(&self.instance, &schedule, decisions.as_ref())?;

        let last = self.history.last().map_or(0, |h| h.timestamp_ms);
        self.history.push(HistoryEntry {
            timestamp_ms: now_ms().max(last),
            event,
            summary: ReportSummary::from(&report),
        });
        self.proposal = Some(schedule);
        self.decisions = decisions;
        Ok(report)
    }

    pub fn af(&self, kind: AfKind) -> Result<AfJson> {
        let af = match kind {
            AfKind::Feasibility => build_feasibility_af(&self.instance),
            AfKind::Optimality => {
                let s = self.proposal.as_ref().ok_or_else(|| {
                    ServiceError::Invalid("proposal required for the optimality framework".into())
                })?;
                build_optimality_af(&self.instance, s)?
            }
            AfKind::Fixed => {
                let d = self.decisions.as_ref().ok_or_else(|| {
                    ServiceError::Invalid("decisions required for the fixed framework".into())
                })?;
                build_fixed_decision_af(&self.instance, d)?
            }
        };
        Ok(af.to_json())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("session serializes")
    }
}

/// Parses an exported session, naming the offending field on failure.
pub fn parse_session(text: &str) -> Result<Session> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        // Invariant failures surface at the root and already name their field.
        let path = e.path().to_string();
        let detail = e.into_inner();
        match path.as_str() {
            "." => ServiceError::Invalid(format!("session document: {detail}")),
            _ => ServiceError::Invalid(format!("session document: {path}: {detail}")),
        }
    })
}

pub fn parse_propose_request(text: &str) -> Result<ProposeRequest> {
    serde_json::from_str(text).map_err(|e| ServiceError::Invalid(format!("propose request: {e}")))
}

pub fn parse_disturbance(text: &str) -> Result<Disturbance> {
    serde_json::from_str(text).map_err(|e| ServiceError::Invalid(format!("disturbance: {e}")))
}
