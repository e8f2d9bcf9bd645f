#![no_main]

use libfuzzer_sys::fuzz_target;
use semibranch::io::{parse_auto, parse_dot, write_dot};

fuzz_target!(|data: &str| {
    let _ = parse_auto(data);
    if let Ok(d) = parse_dot(data) {
        assert_eq!(parse_dot(&write_dot(&d)).as_ref(), Ok(&d));
    }
});
