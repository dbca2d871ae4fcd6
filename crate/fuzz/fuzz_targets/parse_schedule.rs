#![no_main]

use argsched_core::{wire, Instance};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = wire::parse_schedule(text) {
        assert!(s.iter().all(|a| a.machine >= 1 && a.job >= 1));
        let again = serde_json::to_string(&s).unwrap();
        assert_eq!(wire::parse_schedule(&again).unwrap(), s);
    }
    let inst = Instance::new(3, vec![1, 2, 3, 4]).unwrap();
    if let Ok(s) = wire::parse_schedule_for(&inst, text) {
        assert!(s.iter().all(|a| inst.contains(a)));
    }
});
