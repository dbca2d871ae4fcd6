#![no_main]

use argsched_core::{enumerate_stable, wire};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = wire::parse_af(text) else {
        return;
    };
    if let Ok(af) = doc.into_framework() {
        assert_eq!(af.to_json().into_framework().unwrap(), af);
        // Small frameworks only; the budget turns larger ones into an error.
        let _ = enumerate_stable(&af, 1 << 12);
    }
});
