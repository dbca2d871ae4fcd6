#![no_main]

use argsched_core::wire;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = wire::parse_instance(text) {
        assert!(inst.machines() >= 1);
        assert!(inst.processing_times().iter().all(|&p| p >= 1));
        let again = serde_json::to_string(&inst).unwrap();
        assert_eq!(wire::parse_instance(&again).unwrap(), inst);
    }
});
