#![no_main]

use argsched_service::{parse_session, ProposeRequest};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(mut session) = parse_session(text) {
        let doc = session.to_json();
        assert_eq!(parse_session(&doc).unwrap(), session);
        let _ = session.propose(ProposeRequest::default());
    }
});
