//! The feasibility, optimality and fixed-decision frameworks of a scheduling problem.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::framework::{AfKind, ArgFramework, ArgumentId, Extension};
use crate::scheduling::{
    compute_metrics, pep_from_metrics, sep_from_metrics, Assignment, FixedDecisions, Instance,
    Schedule,
};

/// Row-major index of `(machine, job)`, both 1-based.
fn idx(jobs: usize, machine: usize, job: usize) -> usize {
    (machine - 1) * jobs + (job - 1)
}

fn feasibility_edges(inst: &Instance) -> BTreeSet<(usize, usize)> {
    let (m, n) = (inst.machines(), inst.jobs());
    let mut edges = BTreeSet::new();
    for job in 1..=n {
        for i in 1..=m {
            for k in (1..=m).filter(|&k| k != i) {
                edges.insert((idx(n, i, job), idx(n, k, job)));
            }
        }
    }
    edges
}

/// Machines compete for each job: `a(i, j)` attacks `a(k, j)` whenever `i != k`.
pub fn build_feasibility_af(inst: &Instance) -> ArgFramework {
    ArgFramework::from_index_edges(
        AfKind::Feasibility,
        inst.machines(),
        inst.jobs(),
        feasibility_edges(inst),
    )
}

pub fn schedule_to_extension(s: &Schedule) -> Extension {
    s.iter().map(ArgumentId::from).collect()
}

pub fn extension_to_schedule(e: &Extension) -> Schedule {
    e.iter().map(Assignment::from).collect()
}

/// Attack edits turning the feasibility framework into the optimality framework of `s`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OptimalityEdits {
    /// `a(i, j) -> a(i', j)` dropped because critical job `j` would finish earlier on `i'`.
    pub removed: BTreeSet<(ArgumentId, ArgumentId)>,
    /// `a(i', j') -> a(i, j)` added because swapping `j` and `j'` improves `S`.
    pub added: BTreeSet<(ArgumentId, ArgumentId)>,
}

pub fn optimality_edits(inst: &Instance, s: &Schedule) -> Result<OptimalityEdits> {
    let metrics = compute_metrics(inst, s)?;
    let removed = sep_from_metrics(inst, &metrics)
        .into_iter()
        .map(|v| {
            (
                ArgumentId::new(v.machine, v.job),
                ArgumentId::new(v.to_machine, v.job),
            )
        })
        .collect();
    let added = pep_from_metrics(inst, s, &metrics)
        .into_iter()
        .map(|v| {
            (
                ArgumentId::new(v.other_machine, v.other_job),
                ArgumentId::new(v.machine, v.job),
            )
        })
        .collect();
    Ok(OptimalityEdits { removed, added })
}

/// Feasibility attacks minus single-exchange improvements plus pairwise-exchange conflicts.
///
/// Accepts infeasible schedules; their extensions are simply never stable.
pub fn build_optimality_af(inst: &Instance, s: &Schedule) -> Result<ArgFramework> {
    let edits = optimality_edits(inst, s)?;
    let n = inst.jobs();
    let mut edges = feasibility_edges(inst);
    for (from, to) in &edits.removed {
        edges.remove(&(idx(n, from.machine, from.job), idx(n, to.machine, to.job)));
    }
    for (from, to) in &edits.added {
        edges.insert((idx(n, from.machine, from.job), idx(n, to.machine, to.job)));
    }
    Ok(ArgFramework::from_index_edges(
        AfKind::Optimality,
        inst.machines(),
        n,
        edges,
    ))
}

/// Negative decisions become self-attacks; positive decisions lose every incoming attack.
pub fn build_fixed_decision_af(inst: &Instance, d: &FixedDecisions) -> Result<ArgFramework> {
    inst.check_decisions(d)?;
    let n = inst.jobs();
    let mut edges = feasibility_edges(inst);
    for pair in d.negative() {
        let a = idx(n, pair.machine, pair.job);
        edges.insert((a, a));
    }
    let protected: BTreeSet<usize> = d
        .positive()
        .iter()
        .map(|pair| idx(n, pair.machine, pair.job))
        .collect();
    edges.retain(|(_, to)| !protected.contains(to));
    Ok(ArgFramework::from_index_edges(
        AfKind::Fixed,
        inst.machines(),
        n,
        edges,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{enumerate_stable, is_stable, DEFAULT_ENUMERATION_BUDGET};
    use crate::scheduling::{exact_optimal, DEFAULT_EXACT_BUDGET};

    fn a(i: usize, j: usize) -> ArgumentId {
        ArgumentId::new(i, j)
    }

    fn sched(pairs: &[(usize, usize)]) -> Schedule {
        pairs.iter().copied().collect()
    }

    #[test]
    fn feasibility_two_by_two() {
        let af = build_feasibility_af(&Instance::new(2, vec![1, 1]).unwrap());
        assert_eq!(af.num_arguments(), 4);
        let attacks: Vec<_> = af.attacks().collect();
        assert_eq!(
            attacks,
            vec![
                (a(1, 1), a(2, 1)),
                (a(1, 2), a(2, 2)),
                (a(2, 1), a(1, 1)),
                (a(2, 2), a(1, 2)),
            ]
        );
    }

    #[test]
    fn feasibility_single_machine_has_no_attacks() {
        let af = build_feasibility_af(&Instance::new(1, vec![3, 1, 4]).unwrap());
        assert_eq!(af.num_arguments(), 3);
        assert_eq!(af.num_attacks(), 0);
    }

    #[test]
    fn feasibility_three_by_two() {
        let af = build_feasibility_af(&Instance::new(3, vec![1, 2]).unwrap());
        assert_eq!(af.num_arguments(), 6);
        assert_eq!(af.num_attacks(), 12);
        assert!(af
            .attacks()
            .all(|(x, y)| x.job == y.job && x.machine != y.machine));
    }

    #[test]
    fn correspondence_round_trips() {
        for s in [
            sched(&[(1, 1), (2, 1)]),
            Schedule::new(),
            sched(&[(1, 1), (1, 2), (2, 3)]),
        ] {
            let e = schedule_to_extension(&s);
            assert_eq!(e.len(), s.len());
            assert!(s.iter().all(|p| e.contains(p.into())));
            assert_eq!(extension_to_schedule(&e), s);
        }
    }

    #[test]
    fn optimality_af_of_running_example() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let s = sched(&[(1, 1), (1, 2), (2, 3)]);
        let af = build_optimality_af(&inst, &s).unwrap();

        let mut expected: BTreeSet<_> = build_feasibility_af(&inst).attacks().collect();
        expected.remove(&(a(1, 1), a(2, 1)));
        expected.insert((a(2, 3), a(1, 2)));
        assert_eq!(af.attacks().collect::<BTreeSet<_>>(), expected);
        assert_eq!(af.kind(), AfKind::Optimality);

        let e = schedule_to_extension(&s);
        let analysis = af.analyze(&e).unwrap();
        assert_eq!(analysis.conflicts, vec![(a(2, 3), a(1, 2))]);
        assert_eq!(analysis.unattacked, vec![a(2, 1)]);
    }

    #[test]
    fn optimality_af_of_optimal_schedule_is_unchanged() {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let (s, _) = exact_optimal(&inst, DEFAULT_EXACT_BUDGET).unwrap();
        let opt = build_optimality_af(&inst, &s).unwrap();
        let feas = build_feasibility_af(&inst);
        assert!(opt.attacks().eq(feas.attacks()));
    }

    #[test]
    fn optimality_af_of_empty_instance() {
        let inst = Instance::new(3, vec![]).unwrap();
        let opt = build_optimality_af(&inst, &Schedule::new()).unwrap();
        assert_eq!(opt.num_arguments(), 0);
        assert_eq!(opt.num_attacks(), 0);
    }

    #[test]
    fn fixed_af_of_rostering_example() {
        let inst = Instance::new(2, vec![1, 1]).unwrap();
        let d = FixedDecisions::new([Assignment::new(2, 2)], [Assignment::new(1, 1)]).unwrap();
        let af = build_fixed_decision_af(&inst, &d).unwrap();
        let attacks: Vec<_> = af.attacks().collect();
        assert_eq!(
            attacks,
            vec![
                (a(1, 1), a(2, 1)),
                (a(1, 2), a(2, 2)),
                (a(2, 2), a(1, 2)),
                (a(2, 2), a(2, 2)),
            ]
        );
        assert!(af.is_unattacked(a(1, 1)));
        let stable = enumerate_stable(&af, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(stable, vec![[(1, 1), (1, 2)].into_iter().collect()]);
    }

    #[test]
    fn fixed_af_without_decisions_is_feasibility_af() {
        let inst = Instance::new(3, vec![2, 1]).unwrap();
        let af = build_fixed_decision_af(&inst, &FixedDecisions::default()).unwrap();
        assert!(af.attacks().eq(build_feasibility_af(&inst).attacks()));
        assert_eq!(af.kind(), AfKind::Fixed);
    }

    #[test]
    fn fixed_af_for_unavailable_machine() {
        let inst = Instance::new(3, vec![2, 1, 5]).unwrap();
        let d = FixedDecisions::machine_unavailable(&inst, 2).unwrap();
        let af = build_fixed_decision_af(&inst, &d).unwrap();
        for job in 1..=3 {
            assert!(af.attacks_pair(a(2, job), a(2, job)));
        }
        let e = schedule_to_extension(&sched(&[(1, 1), (3, 2), (1, 3)]));
        assert!(is_stable(&af, &e).unwrap());
    }

    #[test]
    fn fixed_af_rejects_out_of_bounds_decisions() {
        let inst = Instance::new(2, vec![1]).unwrap();
        let d = FixedDecisions::new([Assignment::new(1, 2)], []).unwrap();
        assert!(build_fixed_decision_af(&inst, &d).is_err());
    }

    #[test]
    fn removed_and_added_edits_are_disjoint() {
        let inst = Instance::new(2, vec![4, 1, 3, 2]).unwrap();
        let s = sched(&[(1, 1), (1, 2), (1, 3), (2, 4)]);
        let edits = optimality_edits(&inst, &s).unwrap();
        assert!(!edits.removed.is_empty() && !edits.added.is_empty());
        assert!(edits.removed.is_disjoint(&edits.added));
    }
}
