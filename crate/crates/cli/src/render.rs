//! Plain-text rendering of explanation reports.

use std::fmt::Write;

use argsched_core::{Detail, Dimension, Explanation, ExplanationReport, Form};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn dimension(d: Dimension) -> &'static str {
    match d {
        Dimension::Feasibility => "feasibility",
        Dimension::Efficiency => "efficiency",
        Dimension::Fixed => "fixed",
    }
}

pub fn describe(detail: &Detail) -> String {
    match *detail {
        Detail::DuplicateAssignment {
            job,
            machine,
            other_machine,
        } => format!("job {job} is on machines {machine} and {other_machine}"),
        Detail::Swap {
            machine,
            job,
            other_machine,
            other_job,
        } => format!(
            "swap job {job} on machine {machine} with job {other_job} on machine {other_machine}"
        ),
        Detail::Unscheduled { job } => format!("job {job} has no machine"),
        Detail::Move {
            job,
            from_machine,
            to_machine,
        } => format!("move job {job} from machine {from_machine} to machine {to_machine}"),
        Detail::NegativeDecision { machine, job } => {
            format!("job {job} must not run on machine {machine}")
        }
        Detail::PositiveDecision { machine, job } => {
            format!("job {job} must run on machine {machine}")
        }
    }
}

fn heading(x: &Explanation) -> String {
    let form = match x.form {
        Form::Attack => "attack",
        Form::NonAttack => "non-attack",
    };
    format!("[{} {form}]", dimension(x.dimension))
}

/// Verdict lines followed by one sentence per explanation. `full` adds the
/// structured detail of each explanation and the certificates.
pub fn report(r: &ExplanationReport, full: bool) -> String {
    let mut out = String::new();
    writeln!(out, "feasible: {}", verdict(r.feasible)).unwrap();
    writeln!(out, "efficient: {}", verdict(r.efficient)).unwrap();
    if let Some(ok) = r.fixed_ok {
        writeln!(out, "fixed decisions: {}", verdict(ok)).unwrap();
    }
    for x in &r.explanations {
        if full {
            writeln!(out, "{} {}", heading(x), x.text).unwrap();
            writeln!(out, "    {}", describe(&x.detail)).unwrap();
        } else {
            writeln!(out, "{}", x.text).unwrap();
        }
    }
    if full {
        for c in &r.certificates {
            let members: Vec<String> = c.extension.iter().map(|a| a.to_string()).collect();
            writeln!(
                out,
                "certificate: {{{}}} is stable in the {} framework",
                members.join(", "),
                c.kind
            )
            .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use argsched_core::{explain_schedule, FixedDecisions, Instance, Schedule};

    fn running(pairs: &[(usize, usize)]) -> ExplanationReport {
        let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
        let s: Schedule = pairs.iter().copied().collect();
        explain_schedule(&inst, &s, None).unwrap()
    }

    #[test]
    fn short_report() {
        let text = report(&running(&[(1, 1), (1, 2), (2, 3)]), false);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "feasible: yes");
        assert_eq!(lines[1], "efficient: no");
        assert_eq!(lines.len(), 4);
        assert!(lines[2].contains("swapping jobs 3 and 2"), "{text}");
        assert!(lines[3].contains("moving job 1 to machine 2"), "{text}");
    }

    #[test]
    fn full_report_lists_certificates() {
        let text = report(&running(&[(1, 2), (2, 1), (2, 3)]), true);
        assert_eq!(
            text,
            "feasible: yes\nefficient: yes\n\
             certificate: {a(1,2), a(2,1), a(2,3)} is stable in the feasibility framework\n\
             certificate: {a(1,2), a(2,1), a(2,3)} is stable in the optimality framework\n"
        );
    }

    #[test]
    fn full_report_describes_details() {
        let inst = Instance::new(2, vec![1, 1]).unwrap();
        let s: Schedule = [(2, 1), (2, 2)].into_iter().collect();
        let d = FixedDecisions::new(
            [argsched_core::Assignment::new(2, 2)],
            [argsched_core::Assignment::new(1, 1)],
        )
        .unwrap();
        let text = report(&explain_schedule(&inst, &s, Some(&d)).unwrap(), true);
        assert!(text.contains("fixed decisions: no"));
        assert!(text.contains("[fixed attack] "), "{text}");
        assert!(
            text.contains("    job 2 must not run on machine 2"),
            "{text}"
        );
        assert!(text.contains("    job 1 must run on machine 1"), "{text}");
    }
}
