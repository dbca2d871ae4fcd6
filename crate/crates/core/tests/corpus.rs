//! Replays the checked-in fuzz seeds through the parsers they target.

use std::fs;
use std::path::PathBuf;

use argsched_core::{build_fixed_decision_af, wire, Instance};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn check<T, E: std::fmt::Debug>(
    target: &str,
    accepted: &[&str],
    parse: impl Fn(&str) -> Result<T, E>,
) {
    for (name, text) in seeds(target) {
        let ok = parse(&text).is_ok();
        assert_eq!(ok, accepted.contains(&name.as_str()), "{target}/{name}");
    }
}

#[test]
fn instance_seeds() {
    check(
        "parse_instance",
        &["running", "empty", "huge"],
        wire::parse_instance,
    );
}

#[test]
fn schedule_seeds() {
    check(
        "parse_schedule",
        &["running", "empty", "out_of_bounds"],
        wire::parse_schedule,
    );
    let inst = Instance::new(3, vec![1, 2, 3, 4]).unwrap();
    check("parse_schedule", &["running", "empty"], |t| {
        wire::parse_schedule_for(&inst, t)
    });
}

#[test]
fn decision_seeds() {
    check(
        "parse_decisions",
        &["roster", "empty", "ill_machine"],
        wire::parse_decisions,
    );
    let inst = Instance::new(3, vec![2, 1, 2]).unwrap();
    check(
        "parse_decisions",
        &["roster", "empty", "ill_machine"],
        |t| wire::parse_decisions_for(&inst, t).and_then(|d| build_fixed_decision_af(&inst, &d)),
    );
}

#[test]
fn framework_seeds() {
    check("parse_af", &["two_by_two", "fixed_self_attack"], |t| {
        wire::parse_af(t).and_then(|doc| doc.into_framework())
    });
}
