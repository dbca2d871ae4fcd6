#![no_main]

use argsched_core::{build_fixed_decision_af, wire, Instance};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = wire::parse_decisions(text) {
        assert!(d.negative().is_disjoint(d.positive()));
        let again = serde_json::to_string(&d).unwrap();
        assert_eq!(wire::parse_decisions(&again).unwrap(), d);
    }
    let inst = Instance::new(3, vec![2, 1, 2]).unwrap();
    if let Ok(d) = wire::parse_decisions_for(&inst, text) {
        build_fixed_decision_af(&inst, &d).unwrap();
    }
});
