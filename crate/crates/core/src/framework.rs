//! Finite abstract argumentation frameworks over the machine/job grid.
//!
//! Every framework holds the full grid of arguments `a(i, j)`; frameworks differ only
//! in their attacks. Arguments are indexed row-major, so iterating indices visits
//! arguments in `(machine, job)` order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scheduling::Assignment;

/// Default limit on the number of subsets `enumerate_stable` may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;

/// The argument `a(machine, job)`, standing for assigning `job` to `machine`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct ArgumentId {
    pub machine: usize,
    pub job: usize,
}

impl ArgumentId {
    pub const fn new(machine: usize, job: usize) -> Self {
        ArgumentId { machine, job }
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.machine, self.job)
    }
}

impl From<(usize, usize)> for ArgumentId {
    fn from((machine, job): (usize, usize)) -> Self {
        ArgumentId { machine, job }
    }
}

impl From<ArgumentId> for (usize, usize) {
    fn from(a: ArgumentId) -> Self {
        (a.machine, a.job)
    }
}

impl From<Assignment> for ArgumentId {
    fn from(a: Assignment) -> Self {
        ArgumentId::new(a.machine, a.job)
    }
}

impl From<ArgumentId> for Assignment {
    fn from(a: ArgumentId) -> Self {
        Assignment::new(a.machine, a.job)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AfKind {
    Feasibility,
    Optimality,
    Fixed,
}

impl AfKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AfKind::Feasibility => "feasibility",
            AfKind::Optimality => "optimality",
            AfKind::Fixed => "fixed",
        }
    }
}

impl fmt::Display for AfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for AfKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "feasibility" => Ok(AfKind::Feasibility),
            "optimality" => Ok(AfKind::Optimality),
            "fixed" => Ok(AfKind::Fixed),
            other => Err(format!(
                "unknown framework kind {other:?} (expected feasibility, optimality or fixed)"
            )),
        }
    }
}

/// A set of arguments, evaluated against some framework.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Extension {
    members: BTreeSet<ArgumentId>,
}

impl Extension {
    pub fn new() -> Self {
        Extension::default()
    }

    pub fn contains(&self, arg: ArgumentId) -> bool {
        self.members.contains(&arg)
    }

    pub fn insert(&mut self, arg: ArgumentId) -> bool {
        self.members.insert(arg)
    }

    pub fn iter(&self) -> impl Iterator<Item = ArgumentId> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.members
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<I: IntoIterator<Item = ArgumentId>>(iter: I) -> Self {
        Extension {
            members: iter.into_iter().collect(),
        }
    }
}

impl FromIterator<(usize, usize)> for Extension {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        iter.into_iter().map(ArgumentId::from).collect()
    }
}

/// Arguments `{a(i, j)}` for an `machines x jobs` grid plus a directed attack relation.
#[derive(Debug, Clone)]
pub struct ArgFramework {
    kind: AfKind,
    machines: usize,
    jobs: usize,
    /// Sorted, deduplicated out-neighbours per argument index.
    out: Vec<Vec<usize>>,
    in_degree: Vec<usize>,
    edges: HashSet<(usize, usize)>,
}

impl PartialEq for ArgFramework {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.machines == other.machines
            && self.jobs == other.jobs
            && self.out == other.out
    }
}

impl Eq for ArgFramework {}

impl ArgFramework {
    pub fn new(
        kind: AfKind,
        machines: usize,
        jobs: usize,
        attacks: impl IntoIterator<Item = (ArgumentId, ArgumentId)>,
    ) -> Result<Self> {
        if machines.checked_mul(jobs).is_none() {
            return Err(Error::InvalidInstance(format!(
                "{machines} machines by {jobs} jobs overflows the argument count"
            )));
        }
        let mut edges = BTreeSet::new();
        let index = |a: ArgumentId| {
            if (1..=machines).contains(&a.machine) && (1..=jobs).contains(&a.job) {
                Ok((a.machine - 1) * jobs + (a.job - 1))
            } else {
                Err(Error::ForeignArgument(a))
            }
        };
        for (from, to) in attacks {
            edges.insert((index(from)?, index(to)?));
        }
        Ok(Self::from_index_edges(kind, machines, jobs, edges))
    }

    pub(crate) fn from_index_edges(
        kind: AfKind,
        machines: usize,
        jobs: usize,
        edges: BTreeSet<(usize, usize)>,
    ) -> Self {
        let size = machines * jobs;
        let mut out = vec![Vec::new(); size];
        let mut in_degree = vec![0; size];
        // BTreeSet iteration keeps every out-list sorted.
        for &(from, to) in &edges {
            out[from].push(to);
            in_degree[to] += 1;
        }
        ArgFramework {
            kind,
            machines,
            jobs,
            out,
            in_degree,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn kind(&self) -> AfKind {
        self.kind
    }

    pub fn machines(&self) -> usize {
        self.machines
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn num_arguments(&self) -> usize {
        self.machines * self.jobs
    }

    pub fn num_attacks(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, arg: ArgumentId) -> bool {
        (1..=self.machines).contains(&arg.machine) && (1..=self.jobs).contains(&arg.job)
    }

    pub(crate) fn index_of(&self, arg: ArgumentId) -> usize {
        (arg.machine - 1) * self.jobs + (arg.job - 1)
    }

    pub(crate) fn arg_at(&self, idx: usize) -> ArgumentId {
        ArgumentId::new(idx / self.jobs + 1, idx % self.jobs + 1)
    }

    /// Arguments in `(machine, job)` order.
    pub fn arguments(&self) -> impl Iterator<Item = ArgumentId> + '_ {
        (0..self.num_arguments()).map(|idx| self.arg_at(idx))
    }

    /// Attacks in `(attacker, target)` order.
    pub fn attacks(&self) -> impl Iterator<Item = (ArgumentId, ArgumentId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(move |(from, targets)| {
                targets
                    .iter()
                    .map(move |&to| (self.arg_at(from), self.arg_at(to)))
            })
    }

    pub fn attacks_pair(&self, attacker: ArgumentId, target: ArgumentId) -> bool {
        self.contains(attacker)
            && self.contains(target)
            && self
                .edges
                .contains(&(self.index_of(attacker), self.index_of(target)))
    }

    pub fn targets_of(&self, attacker: ArgumentId) -> impl Iterator<Item = ArgumentId> + '_ {
        let targets: &[usize] = if self.contains(attacker) {
            &self.out[self.index_of(attacker)]
        } else {
            &[]
        };
        targets.iter().map(|&idx| self.arg_at(idx))
    }

    /// No argument in the framework attacks `arg`.
    pub fn is_unattacked(&self, arg: ArgumentId) -> bool {
        self.contains(arg) && self.in_degree[self.index_of(arg)] == 0
    }

    fn member_mask(&self, e: &Extension) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.num_arguments()];
        for arg in e.iter() {
            if !self.contains(arg) {
                return Err(Error::ForeignArgument(arg));
            }
            mask[self.index_of(arg)] = true;
        }
        Ok(mask)
    }

    /// Inspects every out-edge of every member once.
    pub fn analyze(&self, e: &Extension) -> Result<StabilityAnalysis> {
        let mask = self.member_mask(e)?;
        Ok(self.analyze_mask(&mask))
    }

    fn analyze_mask(&self, mask: &[bool]) -> StabilityAnalysis {
        let mut attacked = vec![false; mask.len()];
        let mut conflicts = Vec::new();
        let mut pairs_examined = 0;
        for (from, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            for &to in &self.out[from] {
                pairs_examined += 1;
                if mask[to] {
                    conflicts.push((self.arg_at(from), self.arg_at(to)));
                } else {
                    attacked[to] = true;
                }
            }
        }
        let unattacked = (0..mask.len())
            .filter(|&idx| !mask[idx] && !attacked[idx])
            .map(|idx| self.arg_at(idx))
            .collect();
        StabilityAnalysis {
            conflicts,
            unattacked,
            pairs_examined,
        }
    }

    pub fn to_json(&self) -> AfJson {
        AfJson {
            kind: self.kind,
            arguments: self.arguments().collect(),
            attacks: self.attacks().collect(),
        }
    }
}

/// Outcome of checking an extension against a framework.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityAnalysis {
    /// Attacks with both endpoints in the extension, in `(attacker, target)` order.
    pub conflicts: Vec<(ArgumentId, ArgumentId)>,
    /// Arguments outside the extension that no member attacks, in order.
    pub unattacked: Vec<ArgumentId>,
    /// Number of attack pairs inspected.
    pub pairs_examined: usize,
}

impl StabilityAnalysis {
    pub fn is_conflict_free(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn is_stable(&self) -> bool {
        self.conflicts.is_empty() && self.unattacked.is_empty()
    }
}

pub fn is_conflict_free(af: &ArgFramework, e: &Extension) -> Result<bool> {
    Ok(af.analyze(e)?.is_conflict_free())
}

pub fn is_stable(af: &ArgFramework, e: &Extension) -> Result<bool> {
    Ok(af.analyze(e)?.is_stable())
}

pub fn unattacked_by(af: &ArgFramework, e: &Extension) -> Result<BTreeSet<ArgumentId>> {
    Ok(af.analyze(e)?.unattacked.into_iter().collect())
}

/// All stable extensions by brute-force subset enumeration; exponential, meant as an oracle.
pub fn enumerate_stable(af: &ArgFramework, budget: u64) -> Result<Vec<Extension>> {
    let k = af.num_arguments();
    let subsets = 1u64.checked_shl(k as u32).filter(|_| k < 64);
    let subsets = match subsets {
        Some(n) if n <= budget => n,
        _ => {
            return Err(Error::BudgetExceeded {
                what: "stable extension enumeration",
                required: format!("2^{k}"),
                budget,
            })
        }
    };

    let mut mask = vec![false; k];
    let mut found = Vec::new();
    for bits in 0..subsets {
        for (idx, slot) in mask.iter_mut().enumerate() {
            *slot = bits >> idx & 1 == 1;
        }
        if af.analyze_mask(&mask).is_stable() {
            found.push(
                (0..k)
                    .filter(|&idx| mask[idx])
                    .map(|idx| af.arg_at(idx))
                    .collect::<Extension>(),
            );
        }
    }
    found.sort_by(|a, b| a.members.iter().cmp(b.members.iter()));
    Ok(found)
}

/// Wire form of a framework: `{"kind", "arguments": [[i,j]...], "attacks": [[[i,j],[k,l]]...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AfJson {
    pub kind: AfKind,
    pub arguments: Vec<ArgumentId>,
    pub attacks: Vec<(ArgumentId, ArgumentId)>,
}

impl AfJson {
    /// Rebuilds the framework, requiring the arguments to form a full `m x n` grid.
    pub fn into_framework(self) -> Result<ArgFramework> {
        let machines = self.arguments.iter().map(|a| a.machine).max().unwrap_or(0);
        let jobs = self.arguments.iter().map(|a| a.job).max().unwrap_or(0);
        let args: BTreeSet<_> = self.arguments.iter().copied().collect();
        let grid = machines.checked_mul(jobs);
        if args.len() != self.arguments.len() || Some(args.len()) != grid {
            return Err(Error::Json(
                "arguments must list the full machine/job grid exactly once".into(),
            ));
        }
        if args.iter().any(|a| a.machine == 0 || a.job == 0) {
            return Err(Error::Json("argument indices are 1-based".into()));
        }
        ArgFramework::new(self.kind, machines, jobs, self.attacks)
    }
}
