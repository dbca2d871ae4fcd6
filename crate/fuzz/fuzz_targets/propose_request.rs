#![no_main]

use argsched_core::Instance;
use argsched_service::{parse_propose_request, Session, Solver};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(req) = parse_propose_request(text) else {
        return;
    };
    let inst = Instance::new(2, vec![1, 2, 1]).unwrap();
    let mut session = Session::create("fuzz".into(), inst, Solver::Lpt, 1000).unwrap();
    let before = session.clone();
    match session.propose(req) {
        Ok(_) => assert_eq!(session.history().len(), 2),
        Err(_) => assert_eq!(session, before),
    }
});
