//! JSON documents exchanged with the CLI, the HTTP API and the browser client.
//!
//! All indices are 1-based. Duplicate pairs and unknown fields are rejected.

use crate::error::Result;
use crate::framework::AfJson;
use crate::scheduling::{FixedDecisions, Instance, Schedule};

/// `{"machines": m, "processing_times": [p1, ...]}`
pub fn parse_instance(text: &str) -> Result<Instance> {
    Ok(serde_json::from_str(text)?)
}

/// `{"assignments": [[i, j], ...]}`
pub fn parse_schedule(text: &str) -> Result<Schedule> {
    Ok(serde_json::from_str(text)?)
}

/// Like [`parse_schedule`] but also bounds-checked against `inst`.
pub fn parse_schedule_for(inst: &Instance, text: &str) -> Result<Schedule> {
    let s = parse_schedule(text)?;
    inst.check_schedule(&s)?;
    Ok(s)
}

/// `{"negative": [[i, j], ...], "positive": [[i, j], ...]}`; either list may be omitted.
pub fn parse_decisions(text: &str) -> Result<FixedDecisions> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_decisions_for(inst: &Instance, text: &str) -> Result<FixedDecisions> {
    let d = parse_decisions(text)?;
    inst.check_decisions(&d)?;
    Ok(d)
}

/// `{"kind": ..., "arguments": [[i, j], ...], "attacks": [[[i, j], [k, l]], ...]}`
pub fn parse_af(text: &str) -> Result<AfJson> {
    Ok(serde_json::from_str(text)?)
}
