//! Attack and non-attack explanations for a schedule, with rendered sentences.
//!
//! A schedule is checked in three dimensions. Each finding points at arguments of
//! the schedule's extension `E`:
//!
//! * an *attack* `a -> b` with `a, b` in `E` (a conflict), or
//! * a *non-attack* `E -/-> b` with `b` outside `E` (a gap).
//!
//! | dimension   | attack                                 | non-attack                               |
//! |-------------|----------------------------------------|------------------------------------------|
//! | feasibility | job on two machines                    | job unscheduled                          |
//! | efficiency  | improving pairwise swap                | improving single move                    |
//! | fixed       | negative decision assigned (self-loop) | positive decision missing (unattacked)   |

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::builders::{
    build_feasibility_af, build_fixed_decision_af, build_optimality_af, schedule_to_extension,
};
use crate::error::Result;
use crate::framework::{AfKind, ArgFramework, ArgumentId, Extension};
use crate::scheduling::{
    compute_metrics, is_feasible, pep_from_metrics, satisfies_fixed, sep_from_metrics, Assignment,
    FixedDecisions, Instance, Schedule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Attack,
    NonAttack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Feasibility,
    Efficiency,
    Fixed,
}

impl Dimension {
    pub fn af_kind(self) -> AfKind {
        match self {
            Dimension::Feasibility => AfKind::Feasibility,
            Dimension::Efficiency => AfKind::Optimality,
            Dimension::Fixed => AfKind::Fixed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Detail {
    /// `job` sits on both `machine` and `other_machine`.
    DuplicateAssignment {
        job: usize,
        machine: usize,
        other_machine: usize,
    },
    /// Swap `job` on critical `machine` with the shorter `other_job` on `other_machine`.
    Swap {
        machine: usize,
        job: usize,
        other_machine: usize,
        other_job: usize,
    },
    /// `job` is assigned to no machine.
    Unscheduled {
        job: usize,
    },
    /// Move `job` from critical `from_machine` to `to_machine`.
    Move {
        job: usize,
        from_machine: usize,
        to_machine: usize,
    },
    NegativeDecision {
        machine: usize,
        job: usize,
    },
    PositiveDecision {
        machine: usize,
        job: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explanation {
    pub form: Form,
    pub dimension: Dimension,
    /// Absent for non-attacks, where the extension itself fails to attack.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub attacker: Option<ArgumentId>,
    pub target: ArgumentId,
    pub detail: Detail,
    pub text: String,
}

impl Explanation {
    fn new(
        form: Form,
        dimension: Dimension,
        attacker: Option<ArgumentId>,
        target: ArgumentId,
        detail: Detail,
    ) -> Self {
        let mut x = Explanation {
            form,
            dimension,
            attacker,
            target,
            detail,
            text: String::new(),
        };
        x.text = render_text(&x);
        x
    }

    fn sort_key(&self) -> (Dimension, Form, Option<ArgumentId>, ArgumentId) {
        (self.dimension, self.form, self.attacker, self.target)
    }
}

/// Fills the sentence template for the explanation's form and dimension.
pub fn render_text(x: &Explanation) -> String {
    let b = x.target;
    match (x.form, x.dimension, x.attacker) {
        (Form::Attack, Dimension::Feasibility, Some(a)) => format!(
            "S is not feasible because attack a({},{}) -> a({},{}) shows that two machines {} and {} are assigned the same job {}.",
            a.machine, a.job, b.machine, b.job, a.machine, b.machine, a.job
        ),
        (Form::Attack, Dimension::Efficiency, Some(a)) => format!(
            "S is not efficient because attack a({},{}) -> a({},{}) shows that S can be improved by swapping jobs {} and {} between machines {} and {}.",
            a.machine, a.job, b.machine, b.job, a.job, b.job, a.machine, b.machine
        ),
        (Form::Attack, Dimension::Fixed, Some(a)) => format!(
            "S violates fixed decisions because attack a({},{}) -> a({},{}) shows that job {} is assigned to machine {} contrary to the negative fixed decision ({}, {}).",
            a.machine, a.job, b.machine, b.job, b.job, b.machine, b.machine, b.job
        ),
        (Form::NonAttack, Dimension::Feasibility, _) => format!(
            "S is not feasible because non-attack E -/-> a({},{}) shows that job {} is not scheduled.",
            b.machine, b.job, b.job
        ),
        (Form::NonAttack, Dimension::Efficiency, _) => format!(
            "S is not efficient because non-attack E -/-> a({},{}) shows that S can be improved by moving job {} to machine {}.",
            b.machine, b.job, b.job, b.machine
        ),
        (Form::NonAttack, Dimension::Fixed, _) => format!(
            "S violates fixed decisions because non-attack E -/-> a({},{}) shows that job {} is not assigned to machine {} contrary to the positive fixed decision ({}, {}).",
            b.machine, b.job, b.job, b.machine, b.machine, b.job
        ),
        (Form::Attack, _, None) => String::new(),
    }
}

/// The three frameworks of one schedule, built once and shared by both explanation kinds.
struct Frameworks {
    extension: Extension,
    feasibility: ArgFramework,
    optimality: ArgFramework,
    fixed: Option<(ArgFramework, FixedDecisions)>,
}

impl Frameworks {
    fn build(inst: &Instance, s: &Schedule, d: Option<&FixedDecisions>) -> Result<Self> {
        inst.check_schedule(s)?;
        let fixed = match d {
            Some(d) => Some((build_fixed_decision_af(inst, d)?, d.clone())),
            None => None,
        };
        Ok(Frameworks {
            extension: schedule_to_extension(s),
            feasibility: build_feasibility_af(inst),
            optimality: build_optimality_af(inst, s)?,
            fixed,
        })
    }

    fn attacks(&self) -> Vec<Explanation> {
        let e = &self.extension;
        let mut out = Vec::new();
        let internal = |af: &ArgFramework| -> Vec<(ArgumentId, ArgumentId)> {
            e.iter()
                .flat_map(|a| {
                    af.targets_of(a)
                        .filter(|&b| e.contains(b))
                        .map(move |b| (a, b))
                })
                .collect()
        };

        for (a, b) in internal(&self.feasibility) {
            out.push(Explanation::new(
                Form::Attack,
                Dimension::Feasibility,
                Some(a),
                b,
                Detail::DuplicateAssignment {
                    job: a.job,
                    machine: a.machine,
                    other_machine: b.machine,
                },
            ));
        }
        for (a, b) in internal(&self.optimality) {
            if self.feasibility.attacks_pair(a, b) {
                continue;
            }
            out.push(Explanation::new(
                Form::Attack,
                Dimension::Efficiency,
                Some(a),
                b,
                Detail::Swap {
                    machine: b.machine,
                    job: b.job,
                    other_machine: a.machine,
                    other_job: a.job,
                },
            ));
        }
        if let Some((fixed, _)) = &self.fixed {
            for (a, b) in internal(fixed) {
                if self.feasibility.attacks_pair(a, b) {
                    continue;
                }
                out.push(Explanation::new(
                    Form::Attack,
                    Dimension::Fixed,
                    Some(a),
                    b,
                    Detail::NegativeDecision {
                        machine: b.machine,
                        job: b.job,
                    },
                ));
            }
        }
        out
    }

    fn non_attacks(&self) -> Result<Vec<Explanation>> {
        let e = &self.extension;
        let mut out = Vec::new();

        for b in self.feasibility.analyze(e)?.unattacked {
            out.push(Explanation::new(
                Form::NonAttack,
                Dimension::Feasibility,
                None,
                b,
                Detail::Unscheduled { job: b.job },
            ));
        }

        for b in self.optimality.analyze(e)?.unattacked {
            // b must itself attack E: the member it competes with lost its attack on b.
            let source = self
                .optimality
                .targets_of(b)
                .filter(|&c| e.contains(c) && c.job == b.job)
                .map(|c| c.machine)
                .min();
            if let Some(from_machine) = source {
                out.push(Explanation::new(
                    Form::NonAttack,
                    Dimension::Efficiency,
                    None,
                    b,
                    Detail::Move {
                        job: b.job,
                        from_machine,
                        to_machine: b.machine,
                    },
                ));
            }
        }

        if let Some((fixed, d)) = &self.fixed {
            for pair in d.positive() {
                let b = ArgumentId::from(*pair);
                if !e.contains(b) && fixed.is_unattacked(b) {
                    out.push(Explanation::new(
                        Form::NonAttack,
                        Dimension::Fixed,
                        None,
                        b,
                        Detail::PositiveDecision {
                            machine: b.machine,
                            job: b.job,
                        },
                    ));
                }
            }
        }
        Ok(out)
    }
}

fn sorted(mut xs: Vec<Explanation>) -> Vec<Explanation> {
    xs.sort_by_key(Explanation::sort_key);
    xs
}

/// Conflicts inside the schedule's extension, in each dimension's framework.
pub fn attack_explanations(
    inst: &Instance,
    s: &Schedule,
    d: Option<&FixedDecisions>,
) -> Result<Vec<Explanation>> {
    Ok(sorted(Frameworks::build(inst, s, d)?.attacks()))
}

/// Arguments left unattacked by the schedule's extension, in each dimension's framework.
pub fn non_attack_explanations(
    inst: &Instance,
    s: &Schedule,
    d: Option<&FixedDecisions>,
) -> Result<Vec<Explanation>> {
    Ok(sorted(Frameworks::build(inst, s, d)?.non_attacks()?))
}

/// A stable extension witnessing that the schedule is good in one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: AfKind,
    pub extension: Extension,
    /// Decisions the schedule honours; present for fixed-decision certificates.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decisions: Option<FixedDecisions>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplanationReport {
    pub feasible: bool,
    /// Feasible and free of improving single moves and pairwise swaps.
    pub efficient: bool,
    /// Feasible and consistent with the supplied decisions; absent without decisions.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fixed_ok: Option<bool>,
    pub explanations: Vec<Explanation>,
    pub certificates: Vec<Certificate>,
}

impl ExplanationReport {
    pub fn in_dimension(&self, dim: Dimension) -> impl Iterator<Item = &Explanation> {
        self.explanations.iter().filter(move |x| x.dimension == dim)
    }

    pub fn certificate(&self, kind: AfKind) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.kind == kind)
    }

    /// All supplied dimensions hold.
    pub fn all_good(&self) -> bool {
        self.feasible && self.efficient && self.fixed_ok.unwrap_or(true)
    }

    /// Keeps only the first explanation of each dimension.
    pub fn first_per_dimension(mut self) -> Self {
        let mut seen = BTreeSet::new();
        self.explanations.retain(|x| seen.insert(x.dimension));
        self
    }
}

/// Full three-dimension report for `s`, with certificates for the dimensions that hold.
///
/// A dimension's flag is false exactly when explanations exist for it or, for the
/// efficiency and fixed dimensions, when the schedule is infeasible (stability in
/// those frameworks presupposes feasibility; the feasibility explanations say why).
pub fn explain_schedule(
    inst: &Instance,
    s: &Schedule,
    d: Option<&FixedDecisions>,
) -> Result<ExplanationReport> {
    let afs = Frameworks::build(inst, s, d)?;
    let metrics = compute_metrics(inst, s)?;

    let feasible = is_feasible(inst, s)?;
    let efficient = feasible
        && sep_from_metrics(inst, &metrics).is_empty()
        && pep_from_metrics(inst, s, &metrics).is_empty();
    let fixed_ok = d.map(|d| feasible && satisfies_fixed(s, d).is_empty());

    let mut explanations = afs.attacks();
    explanations.extend(afs.non_attacks()?);
    let explanations = sorted(explanations);

    let mut certificates = Vec::new();
    if feasible {
        certificates.push(Certificate {
            kind: AfKind::Feasibility,
            extension: afs.extension.clone(),
            decisions: None,
        });
    }
    if efficient {
        certificates.push(Certificate {
            kind: AfKind::Optimality,
            extension: afs.extension.clone(),
            decisions: None,
        });
    }
    if let (Some(true), Some(d)) = (fixed_ok, d) {
        certificates.push(Certificate {
            kind: AfKind::Fixed,
            extension: afs.extension.clone(),
            decisions: Some(d.clone()),
        });
    }

    Ok(ExplanationReport {
        feasible,
        efficient,
        fixed_ok,
        explanations,
        certificates,
    })
}

/// Applies the edit an efficiency explanation proposes, returning the new schedule.
pub fn apply_improvement(s: &Schedule, x: &Explanation) -> Option<Schedule> {
    let mut next = s.clone();
    match x.detail {
        Detail::Move {
            job,
            from_machine,
            to_machine,
        } => {
            next.remove(Assignment::new(from_machine, job));
            next.insert(Assignment::new(to_machine, job));
        }
        Detail::Swap {
            machine,
            job,
            other_machine,
            other_job,
        } => {
            next.remove(Assignment::new(machine, job));
            next.remove(Assignment::new(other_machine, other_job));
            next.insert(Assignment::new(other_machine, job));
            next.insert(Assignment::new(machine, other_job));
        }
        _ => return None,
    }
    Some(next)
}
