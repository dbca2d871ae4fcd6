//! Makespan scheduling on identical parallel machines.
//!
//! Machines and jobs are numbered from 1, so `Assignment { machine: 2, job: 3 }`
//! is the decision variable `x_{2,3}`. A [`Schedule`] is any set of such pairs:
//! it may assign a job twice or not at all, and every metric below is still
//! defined for it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default limit on the number of job-to-machine maps `exact_optimal` may visit.
pub const DEFAULT_EXACT_BUDGET: u64 = 10_000_000;

/// One `(machine, job)` pair, serialized as `[machine, job]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Assignment {
    pub machine: usize,
    pub job: usize,
}

impl Assignment {
    pub const fn new(machine: usize, job: usize) -> Self {
        Assignment { machine, job }
    }
}

impl From<(usize, usize)> for Assignment {
    fn from((machine, job): (usize, usize)) -> Self {
        Assignment { machine, job }
    }
}

impl From<Assignment> for (usize, usize) {
    fn from(a: Assignment) -> Self {
        (a.machine, a.job)
    }
}

/// A problem instance: `machines` identical machines and one processing time per job.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance")]
pub struct Instance {
    machines: usize,
    processing_times: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    machines: usize,
    processing_times: Vec<u64>,
}

impl TryFrom<RawInstance> for Instance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        Instance::new(raw.machines, raw.processing_times)
    }
}

impl Instance {
    pub fn new(machines: usize, processing_times: Vec<u64>) -> Result<Self> {
        if machines == 0 {
            return Err(Error::InvalidInstance("machines must be at least 1".into()));
        }
        if let Some(pos) = processing_times.iter().position(|&p| p == 0) {
            return Err(Error::InvalidInstance(format!(
                "processing time of job {} must be at least 1",
                pos + 1
            )));
        }
        Ok(Instance {
            machines,
            processing_times,
        })
    }

    pub fn machines(&self) -> usize {
        self.machines
    }

    pub fn jobs(&self) -> usize {
        self.processing_times.len()
    }

    pub fn processing_times(&self) -> &[u64] {
        &self.processing_times
    }

    /// Processing time of the 1-based `job`.
    ///
    /// Panics if `job` is out of range.
    pub fn p(&self, job: usize) -> u64 {
        self.processing_times[job - 1]
    }

    pub fn contains(&self, pair: Assignment) -> bool {
        (1..=self.machines).contains(&pair.machine) && (1..=self.jobs()).contains(&pair.job)
    }

    pub fn check_pair(&self, pair: Assignment) -> Result<()> {
        if self.contains(pair) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                pair,
                machines: self.machines,
                jobs: self.jobs(),
            })
        }
    }

    pub fn check_schedule(&self, schedule: &Schedule) -> Result<()> {
        schedule.iter().try_for_each(|pair| self.check_pair(pair))
    }

    pub fn check_decisions(&self, decisions: &FixedDecisions) -> Result<()> {
        decisions
            .negative()
            .iter()
            .chain(decisions.positive())
            .try_for_each(|&pair| self.check_pair(pair))
    }
}

/// An arbitrary 0/1 assignment relation between machines and jobs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSchedule", into = "RawSchedule")]
pub struct Schedule {
    assigned: BTreeSet<Assignment>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSchedule {
    assignments: Vec<Assignment>,
}

impl TryFrom<RawSchedule> for Schedule {
    type Error = Error;

    fn try_from(raw: RawSchedule) -> Result<Self> {
        let assigned = collect_unique("assignments", raw.assignments)?;
        Ok(Schedule { assigned })
    }
}

impl From<Schedule> for RawSchedule {
    fn from(s: Schedule) -> Self {
        RawSchedule {
            assignments: s.assigned.into_iter().collect(),
        }
    }
}

/// Rejects duplicates and zero indices; upper bounds need an instance and are checked there.
fn collect_unique(field: &'static str, pairs: Vec<Assignment>) -> Result<BTreeSet<Assignment>> {
    let mut set = BTreeSet::new();
    for pair in pairs {
        if pair.machine == 0 || pair.job == 0 {
            return Err(Error::InvalidInstance(format!(
                "{field}: indices are 1-based, got ({}, {})",
                pair.machine, pair.job
            )));
        }
        if !set.insert(pair) {
            return Err(Error::DuplicatePair { field, pair });
        }
    }
    Ok(set)
}

impl Schedule {
    pub fn new() -> Self {
        Schedule::default()
    }

    /// Builds a schedule from `job -> machine` (1-based machines, job `j` at index `j - 1`).
    pub fn from_machine_map(machine_of_job: &[usize]) -> Self {
        machine_of_job
            .iter()
            .enumerate()
            .map(|(idx, &machine)| Assignment::new(machine, idx + 1))
            .collect()
    }

    pub fn contains(&self, pair: Assignment) -> bool {
        self.assigned.contains(&pair)
    }

    pub fn is_assigned(&self, machine: usize, job: usize) -> bool {
        self.contains(Assignment::new(machine, job))
    }

    pub fn insert(&mut self, pair: Assignment) -> bool {
        self.assigned.insert(pair)
    }

    pub fn remove(&mut self, pair: Assignment) -> bool {
        self.assigned.remove(&pair)
    }

    pub fn iter(&self) -> impl Iterator<Item = Assignment> + '_ {
        self.assigned.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.assigned.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assigned.is_empty()
    }

    pub fn assignments(&self) -> &BTreeSet<Assignment> {
        &self.assigned
    }
}

impl FromIterator<Assignment> for Schedule {
    fn from_iter<I: IntoIterator<Item = Assignment>>(iter: I) -> Self {
        Schedule {
            assigned: iter.into_iter().collect(),
        }
    }
}

impl FromIterator<(usize, usize)> for Schedule {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        iter.into_iter().map(Assignment::from).collect()
    }
}

/// Completion times, makespan and critical pairs of a schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleMetrics {
    /// `completion[i - 1]` is the load `C_i` of machine `i`.
    pub completion: Vec<u64>,
    pub cmax: u64,
    /// Assigned pairs on machines whose load equals the makespan.
    pub critical: BTreeSet<Assignment>,
}

impl ScheduleMetrics {
    pub fn load(&self, machine: usize) -> u64 {
        self.completion[machine - 1]
    }

    pub fn is_critical(&self, pair: Assignment) -> bool {
        self.critical.contains(&pair)
    }
}

pub fn compute_metrics(inst: &Instance, s: &Schedule) -> Result<ScheduleMetrics> {
    inst.check_schedule(s)?;
    let mut completion = vec![0u64; inst.machines()];
    for pair in s.iter() {
        completion[pair.machine - 1] += inst.p(pair.job);
    }
    let cmax = completion.iter().copied().max().unwrap_or(0);
    let critical = s
        .iter()
        .filter(|pair| completion[pair.machine - 1] == cmax)
        .collect();
    Ok(ScheduleMetrics {
        completion,
        cmax,
        critical,
    })
}

/// Every job has exactly one machine.
pub fn is_feasible(inst: &Instance, s: &Schedule) -> Result<bool> {
    inst.check_schedule(s)?;
    let mut count = vec![0usize; inst.jobs()];
    for pair in s.iter() {
        count[pair.job - 1] += 1;
    }
    Ok(count.iter().all(|&c| c == 1))
}

/// A critical job that would finish earlier on another machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SepViolation {
    /// Critical machine currently holding `job`.
    pub machine: usize,
    pub to_machine: usize,
    pub job: usize,
}

/// A critical job that should trade places with a shorter job on another machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PepViolation {
    /// Critical machine holding `job`.
    pub machine: usize,
    /// Machine holding `other_job`.
    pub other_machine: usize,
    pub job: usize,
    pub other_job: usize,
}

/// Triples `(i, i', j)` with `(i, j)` critical and `C_i > C_{i'} + p_j`, in lexicographic order.
pub fn sep_violations(inst: &Instance, s: &Schedule) -> Result<Vec<SepViolation>> {
    let metrics = compute_metrics(inst, s)?;
    Ok(sep_from_metrics(inst, &metrics))
}

pub(crate) fn sep_from_metrics(inst: &Instance, metrics: &ScheduleMetrics) -> Vec<SepViolation> {
    let mut out = Vec::new();
    for crit in &metrics.critical {
        let load = metrics.load(crit.machine);
        let p = inst.p(crit.job);
        for other in 1..=inst.machines() {
            if other != crit.machine && load > metrics.load(other) + p {
                out.push(SepViolation {
                    machine: crit.machine,
                    to_machine: other,
                    job: crit.job,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Quadruples `(i, i', j, j')` where swapping `j` on critical `i` with the shorter `j'` on `i'`
/// lowers both loads below `C_i`, in lexicographic order.
pub fn pep_violations(inst: &Instance, s: &Schedule) -> Result<Vec<PepViolation>> {
    let metrics = compute_metrics(inst, s)?;
    Ok(pep_from_metrics(inst, s, &metrics))
}

pub(crate) fn pep_from_metrics(
    inst: &Instance,
    s: &Schedule,
    metrics: &ScheduleMetrics,
) -> Vec<PepViolation> {
    let mut out = Vec::new();
    for crit in &metrics.critical {
        let load = metrics.load(crit.machine);
        let p = inst.p(crit.job);
        for other in s.iter() {
            if other.machine == crit.machine || other.job == crit.job {
                continue;
            }
            let q = inst.p(other.job);
            if p > q && load + q > metrics.load(other.machine) + p {
                out.push(PepViolation {
                    machine: crit.machine,
                    other_machine: other.machine,
                    job: crit.job,
                    other_job: other.job,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Forbidden (`negative`) and mandatory (`positive`) assignments.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDecisions", into = "RawDecisions")]
pub struct FixedDecisions {
    negative: BTreeSet<Assignment>,
    positive: BTreeSet<Assignment>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDecisions {
    #[serde(default)]
    negative: Vec<Assignment>,
    #[serde(default)]
    positive: Vec<Assignment>,
}

impl TryFrom<RawDecisions> for FixedDecisions {
    type Error = Error;

    fn try_from(raw: RawDecisions) -> Result<Self> {
        let negative = collect_unique("negative", raw.negative)?;
        let positive = collect_unique("positive", raw.positive)?;
        FixedDecisions::new(negative, positive)
    }
}

impl From<FixedDecisions> for RawDecisions {
    fn from(d: FixedDecisions) -> Self {
        RawDecisions {
            negative: d.negative.into_iter().collect(),
            positive: d.positive.into_iter().collect(),
        }
    }
}

impl FixedDecisions {
    pub fn new(
        negative: impl IntoIterator<Item = Assignment>,
        positive: impl IntoIterator<Item = Assignment>,
    ) -> Result<Self> {
        let negative: BTreeSet<_> = negative.into_iter().collect();
        let positive: BTreeSet<_> = positive.into_iter().collect();
        if let Some(pair) = negative.intersection(&positive).next() {
            return Err(Error::MalformedDecisions(format!(
                "negative and positive decisions must be disjoint, ({}, {}) is in both",
                pair.machine, pair.job
            )));
        }
        let mut seen_jobs = BTreeSet::new();
        for pair in &positive {
            if !seen_jobs.insert(pair.job) {
                return Err(Error::MalformedDecisions(format!(
                    "positive decisions assign job {} to more than one machine",
                    pair.job
                )));
            }
        }
        Ok(FixedDecisions { negative, positive })
    }

    pub fn negative(&self) -> &BTreeSet<Assignment> {
        &self.negative
    }

    pub fn positive(&self) -> &BTreeSet<Assignment> {
        &self.positive
    }

    pub fn is_empty(&self) -> bool {
        self.negative.is_empty() && self.positive.is_empty()
    }

    /// Machine `machine` can take no job, e.g. a worker calling in sick.
    pub fn machine_unavailable(inst: &Instance, machine: usize) -> Result<Self> {
        if !(1..=inst.machines()).contains(&machine) {
            return Err(Error::MalformedDecisions(format!(
                "machine {machine} does not exist (instance has {})",
                inst.machines()
            )));
        }
        let pairs = (1..=inst.jobs()).map(|job| Assignment::new(machine, job));
        FixedDecisions::new(pairs, [])
    }

    /// Job `job` may run nowhere.
    pub fn job_cancelled(inst: &Instance, job: usize) -> Result<Self> {
        if !(1..=inst.jobs()).contains(&job) {
            return Err(Error::MalformedDecisions(format!(
                "job {job} does not exist (instance has {})",
                inst.jobs()
            )));
        }
        let pairs = (1..=inst.machines()).map(|machine| Assignment::new(machine, job));
        FixedDecisions::new(pairs, [])
    }

    /// Union of both decision sets, failing if the result breaks an invariant.
    pub fn merge(&self, other: &FixedDecisions) -> Result<Self> {
        FixedDecisions::new(
            self.negative.union(&other.negative).copied(),
            self.positive.union(&other.positive).copied(),
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FixedViolations {
    /// Assigned pairs that a negative decision forbids.
    pub negative: BTreeSet<Assignment>,
    /// Positive decisions the schedule leaves unassigned.
    pub positive: BTreeSet<Assignment>,
}

impl FixedViolations {
    pub fn is_empty(&self) -> bool {
        self.negative.is_empty() && self.positive.is_empty()
    }
}

pub fn satisfies_fixed(s: &Schedule, d: &FixedDecisions) -> FixedViolations {
    FixedViolations {
        negative: d.negative.intersection(&s.assigned).copied().collect(),
        positive: d.positive.difference(&s.assigned).copied().collect(),
    }
}

/// Longest processing time first: jobs by non-increasing time (lower index first on ties),
/// each onto the least loaded machine (lower index first on ties).
pub fn lpt_schedule(inst: &Instance) -> Schedule {
    let mut order: Vec<usize> = (1..=inst.jobs()).collect();
    order.sort_by(|&a, &b| inst.p(b).cmp(&inst.p(a)).then(a.cmp(&b)));

    let mut load = vec![0u64; inst.machines()];
    let mut schedule = Schedule::new();
    for job in order {
        let (idx, _) = load
            .iter()
            .enumerate()
            .min_by(|(ia, la), (ib, lb)| la.cmp(lb).then(ia.cmp(ib)))
            .expect("at least one machine");
        load[idx] += inst.p(job);
        schedule.insert(Assignment::new(idx + 1, job));
    }
    schedule
}

/// Number of job-to-machine maps, or `None` on overflow.
pub fn search_space(inst: &Instance) -> Option<u64> {
    (inst.machines() as u64).checked_pow(u32::try_from(inst.jobs()).ok()?)
}

/// Minimum-makespan schedule by exhaustive enumeration of job-to-machine maps.
///
/// Among minimum-makespan maps the one with the smallest sum of squared machine loads
/// wins, then the first in lexicographic order of `(machine of job 1, machine of job 2, ...)`.
/// An optimum with two or more critical machines can still admit an improving single
/// move or pairwise swap between them and a lighter machine; each such edit strictly
/// lowers the sum of squares, so the returned schedule never violates either exchange
/// property.
pub fn exact_optimal(inst: &Instance, budget: u64) -> Result<(Schedule, u64)> {
    let space = search_space(inst);
    match space {
        Some(size) if size <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                what: "exact makespan search",
                required: space.map_or_else(
                    || format!("{}^{}", inst.machines(), inst.jobs()),
                    |s| s.to_string(),
                ),
                budget,
            })
        }
    }

    let n = inst.jobs();
    let m = inst.machines();
    // machine_of[j] is 0-based; loads kept in sync as the odometer turns.
    let mut machine_of = vec![0usize; n];
    let mut load = vec![0u64; m];
    load[0] = inst.processing_times().iter().sum();

    let score = |load: &[u64]| {
        let cmax = load.iter().copied().max().unwrap_or(0);
        let spread: u128 = load.iter().map(|&c| u128::from(c) * u128::from(c)).sum();
        (cmax, spread)
    };
    let mut best_map = machine_of.clone();
    let mut best = score(&load);

    loop {
        // advance: last job turns fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                let schedule = best_map.iter().map(|&i| i + 1).collect::<Vec<_>>();
                return Ok((Schedule::from_machine_map(&schedule), best.0));
            }
            pos -= 1;
            let p = inst.p(pos + 1);
            load[machine_of[pos]] -= p;
            if machine_of[pos] + 1 < m {
                machine_of[pos] += 1;
                load[machine_of[pos]] += p;
                break;
            }
            machine_of[pos] = 0;
            load[0] += p;
        }
        let current = score(&load);
        if current < best {
            best = current;
            best_map.copy_from_slice(&machine_of);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sched(pairs: &[(usize, usize)]) -> Schedule {
        pairs.iter().copied().collect()
    }

    fn pairs(set: &BTreeSet<Assignment>) -> Vec<(usize, usize)> {
        set.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn metrics_of_running_example() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let m = compute_metrics(&inst, &sched(&[(1, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(m.completion, vec![3, 1]);
        assert_eq!(m.cmax, 3);
        assert_eq!(pairs(&m.critical), vec![(1, 1), (1, 2)]);
    }

    #[test]
    fn metrics_of_empty_instance() {
        let inst = Instance::new(2, vec![]).unwrap();
        let m = compute_metrics(&inst, &Schedule::new()).unwrap();
        assert_eq!(m.completion, vec![0, 0]);
        assert_eq!(m.cmax, 0);
        assert!(m.critical.is_empty());
    }

    #[test]
    fn metrics_three_machines() {
        let inst = Instance::new(3, vec![5, 3, 3, 2]).unwrap();
        let m = compute_metrics(&inst, &sched(&[(1, 1), (2, 2), (2, 3), (3, 4)])).unwrap();
        assert_eq!(m.completion, vec![5, 6, 2]);
        assert_eq!(m.cmax, 6);
        assert_eq!(pairs(&m.critical), vec![(2, 2), (2, 3)]);
    }

    #[test]
    fn metrics_reject_out_of_bounds() {
        let inst = Instance::new(2, vec![1]).unwrap();
        let err = compute_metrics(&inst, &sched(&[(3, 1)])).unwrap_err();
        assert!(matches!(err, Error::OutOfBounds { .. }));
        assert!(compute_metrics(&inst, &sched(&[(1, 2)])).is_err());
    }

    #[test]
    fn metrics_of_infeasible_schedule() {
        let inst = Instance::new(2, vec![2, 3]).unwrap();
        let m = compute_metrics(&inst, &sched(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(m.completion, vec![2, 2]);
        assert_eq!(pairs(&m.critical), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn feasibility() {
        let inst = Instance::new(2, vec![1, 1]).unwrap();
        assert!(is_feasible(&inst, &sched(&[(1, 1), (2, 2)])).unwrap());
        assert!(!is_feasible(&inst, &sched(&[(1, 1), (2, 1)])).unwrap());
        assert!(!is_feasible(&inst, &sched(&[(1, 1)])).unwrap());
        let empty = Instance::new(1, vec![]).unwrap();
        assert!(is_feasible(&empty, &Schedule::new()).unwrap());
    }

    #[test]
    fn sep_examples() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let v = sep_violations(&inst, &sched(&[(1, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(
            v,
            vec![SepViolation {
                machine: 1,
                to_machine: 2,
                job: 1
            }]
        );

        let single = Instance::new(1, vec![4, 2, 7]).unwrap();
        assert!(sep_violations(&single, &sched(&[(1, 1), (1, 2), (1, 3)]))
            .unwrap()
            .is_empty());

        let inst = Instance::new(2, vec![4, 1]).unwrap();
        let v = sep_violations(&inst, &sched(&[(1, 1), (1, 2)])).unwrap();
        let triples: Vec<_> = v.iter().map(|v| (v.machine, v.to_machine, v.job)).collect();
        assert_eq!(triples, vec![(1, 2, 1), (1, 2, 2)]);
    }

    #[test]
    fn pep_examples() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let v = pep_violations(&inst, &sched(&[(1, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(
            v,
            vec![PepViolation {
                machine: 1,
                other_machine: 2,
                job: 2,
                other_job: 3
            }]
        );

        let equal = Instance::new(2, vec![3, 3, 3, 3]).unwrap();
        assert!(
            pep_violations(&equal, &sched(&[(1, 1), (1, 2), (1, 3), (2, 4)]))
                .unwrap()
                .is_empty()
        );

        let inst = Instance::new(2, vec![3, 1, 1]).unwrap();
        assert!(pep_violations(&inst, &sched(&[(1, 1), (2, 2), (2, 3)]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fixed_decision_checks() {
        let d = FixedDecisions::new([Assignment::new(2, 2)], [Assignment::new(1, 1)]).unwrap();
        let v = satisfies_fixed(&sched(&[(1, 1), (2, 2)]), &d);
        assert_eq!(pairs(&v.negative), vec![(2, 2)]);
        assert!(v.positive.is_empty());

        let v = satisfies_fixed(&sched(&[(1, 2), (2, 1)]), &d);
        assert!(v.negative.is_empty());
        assert_eq!(pairs(&v.positive), vec![(1, 1)]);

        let v = satisfies_fixed(&sched(&[(1, 2), (2, 1)]), &FixedDecisions::default());
        assert!(v.is_empty());
    }

    #[test]
    fn malformed_decisions_rejected() {
        let both = FixedDecisions::new([Assignment::new(1, 1)], [Assignment::new(1, 1)]);
        assert!(matches!(both, Err(Error::MalformedDecisions(msg)) if msg.contains("disjoint")));
        let twice = FixedDecisions::new([], [Assignment::new(1, 1), Assignment::new(2, 1)]);
        assert!(matches!(twice, Err(Error::MalformedDecisions(msg)) if msg.contains("job 1")));
    }

    #[test]
    fn lpt_examples() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let s = lpt_schedule(&inst);
        assert_eq!(s, sched(&[(1, 2), (2, 1), (2, 3)]));
        assert_eq!(compute_metrics(&inst, &s).unwrap().cmax, 2);

        let inst = Instance::new(1, vec![3, 1]).unwrap();
        let s = lpt_schedule(&inst);
        assert_eq!(s, sched(&[(1, 1), (1, 2)]));
        assert_eq!(compute_metrics(&inst, &s).unwrap().cmax, 4);

        let inst = Instance::new(2, vec![2, 2]).unwrap();
        assert_eq!(lpt_schedule(&inst), sched(&[(1, 1), (2, 2)]));
    }

    #[test]
    fn exact_examples() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let (s, cmax) = exact_optimal(&inst, DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(cmax, 2);
        // first optimum in lexicographic order of the job->machine map is (1, 2, 1)
        assert_eq!(s, sched(&[(1, 1), (2, 2), (1, 3)]));

        let inst = Instance::new(2, vec![5]).unwrap();
        assert_eq!(exact_optimal(&inst, DEFAULT_EXACT_BUDGET).unwrap().1, 5);

        let inst = Instance::new(3, vec![4, 3, 3, 2, 2]).unwrap();
        let (s, cmax) = exact_optimal(&inst, DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(cmax, 5);
        assert!(is_feasible(&inst, &s).unwrap());
        assert_eq!(compute_metrics(&inst, &s).unwrap().cmax, 5);
    }

    #[test]
    fn exact_prefers_balanced_optimum() {
        // (1,1),(2,2),(2,3) is also optimal but job 2 could move to the idle machine 3.
        let inst = Instance::new(3, vec![6, 2, 4]).unwrap();
        let lopsided = sched(&[(1, 1), (2, 2), (2, 3)]);
        assert_eq!(compute_metrics(&inst, &lopsided).unwrap().cmax, 6);
        assert!(!sep_violations(&inst, &lopsided).unwrap().is_empty());

        let (s, cmax) = exact_optimal(&inst, DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(cmax, 6);
        assert_eq!(s, sched(&[(1, 1), (2, 2), (3, 3)]));
        assert!(sep_violations(&inst, &s).unwrap().is_empty());
        assert!(pep_violations(&inst, &s).unwrap().is_empty());
    }

    #[test]
    fn exact_respects_budget() {
        let inst = Instance::new(3, vec![1; 5]).unwrap();
        assert!(exact_optimal(&inst, 243).is_ok());
        let err = exact_optimal(&inst, 242).unwrap_err();
        assert!(err.to_string().contains("242"), "{err}");
        let huge = Instance::new(10, vec![1; 40]).unwrap();
        assert!(matches!(
            exact_optimal(&huge, u64::MAX),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exact_on_empty_instance() {
        let inst = Instance::new(3, vec![]).unwrap();
        let (s, cmax) = exact_optimal(&inst, 1).unwrap();
        assert!(s.is_empty());
        assert_eq!(cmax, 0);
    }

    #[test]
    fn invalid_instances() {
        assert!(Instance::new(0, vec![1]).is_err());
        let err = Instance::new(2, vec![1, 0]).unwrap_err();
        assert!(err.to_string().contains("job 2"));
    }

    #[test]
    fn disturbance_shortcuts() {
        let inst = Instance::new(3, vec![1, 1]).unwrap();
        let ill = FixedDecisions::machine_unavailable(&inst, 2).unwrap();
        assert_eq!(pairs(ill.negative()), vec![(2, 1), (2, 2)]);
        let cancelled = FixedDecisions::job_cancelled(&inst, 2).unwrap();
        assert_eq!(pairs(cancelled.negative()), vec![(1, 2), (2, 2), (3, 2)]);
        assert!(FixedDecisions::machine_unavailable(&inst, 4).is_err());
        assert!(FixedDecisions::job_cancelled(&inst, 3).is_err());
    }
}
