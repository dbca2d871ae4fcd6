//! Explaining makespan schedules with abstract argumentation.
//!
//! A scheduling instance induces a *feasibility* framework whose stable extensions
//! are exactly the feasible schedules. Editing its attacks with the single and
//! pairwise exchange conditions of a given schedule yields the *optimality*
//! framework; encoding user decisions as self-attacks and unattacked arguments
//! yields the *fixed-decision* framework. Conflicts inside a schedule's extension
//! and arguments the extension fails to attack are the explanations
//! ([`explain::explain_schedule`]).

pub mod builders;
pub mod error;
pub mod explain;
pub mod framework;
pub mod scheduling;
pub mod wire;

pub use builders::{
    build_feasibility_af, build_fixed_decision_af, build_optimality_af, extension_to_schedule,
    optimality_edits, schedule_to_extension, OptimalityEdits,
};
pub use error::{Error, Result};
pub use explain::{
    apply_improvement, attack_explanations, explain_schedule, non_attack_explanations, render_text,
    Certificate, Detail, Dimension, Explanation, ExplanationReport, Form,
};
pub use framework::{
    enumerate_stable, is_conflict_free, is_stable, unattacked_by, AfJson, AfKind, ArgFramework,
    ArgumentId, Extension, StabilityAnalysis, DEFAULT_ENUMERATION_BUDGET,
};
pub use scheduling::{
    compute_metrics, exact_optimal, is_feasible, lpt_schedule, pep_violations, satisfies_fixed,
    search_space, sep_violations, Assignment, FixedDecisions, FixedViolations, Instance,
    PepViolation, Schedule, ScheduleMetrics, SepViolation, DEFAULT_EXACT_BUDGET,
};
