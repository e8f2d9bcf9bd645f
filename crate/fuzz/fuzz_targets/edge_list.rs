#![no_main]

use libfuzzer_sys::fuzz_target;
use semibranch::io::{parse_edge_list, write_edge_list};

fuzz_target!(|data: &str| {
    // Whatever parses must survive a write/parse round trip unchanged.
    if let Ok(d) = parse_edge_list(data) {
        let text = write_edge_list(&d);
        assert_eq!(parse_edge_list(&text).as_ref(), Ok(&d));
    }
});
