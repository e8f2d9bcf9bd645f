#![no_main]

use libfuzzer_sys::fuzz_target;
use semibranch::fixtures;
use semibranch::verdict::{parse_verdict, verify_verdict};

fuzz_target!(|data: &str| {
    let Ok(v) = parse_verdict(data) else {
        return;
    };
    // Hostile certificates and trees must be rejected, never panic.
    for f in fixtures::all() {
        let _ = verify_verdict(&f.digraph, &v);
    }
});
