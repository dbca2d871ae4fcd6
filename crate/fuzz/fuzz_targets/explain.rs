#![no_main]

//! Decodes bytes into a small instance, relation and decision set, then checks that
//! each dimension's flag agrees with its explanations.

use argsched_core::{explain_schedule, Assignment, Dimension, FixedDecisions, Instance, Schedule};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let mut bytes = data.iter().copied();
    let mut next = || bytes.next().unwrap_or(0);
    let m = usize::from(next() % 4) + 1;
    let n = usize::from(next() % 7);
    let p: Vec<u64> = (0..n).map(|_| u64::from(next() % 9) + 1).collect();
    let inst = Instance::new(m, p).unwrap();

    let mut s = Schedule::new();
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            let b = next();
            if b & 1 == 1 {
                s.insert(Assignment::new(i, j));
            }
            match b >> 1 & 3 {
                1 => negative.push(Assignment::new(i, j)),
                2 => positive.push(Assignment::new(i, j)),
                _ => {}
            }
        }
    }
    let d = FixedDecisions::new(negative, positive).ok();
    let report = explain_schedule(&inst, &s, d.as_ref()).unwrap();

    let has = |dim| report.in_dimension(dim).next().is_some();
    assert_eq!(report.feasible, !has(Dimension::Feasibility));
    assert_eq!(
        report.efficient,
        report.feasible && !has(Dimension::Efficiency)
    );
    if let Some(ok) = report.fixed_ok {
        assert_eq!(ok, report.feasible && !has(Dimension::Fixed));
    }
});
