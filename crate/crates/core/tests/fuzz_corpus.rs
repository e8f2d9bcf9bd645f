//! Replays the checked-in fuzz seeds through the fuzz target bodies.

use std::fs;
use std::path::PathBuf;

use semibranch::fixtures;
use semibranch::io::{parse_auto, parse_dot, parse_edge_list, write_dot, write_edge_list};
use semibranch::verdict::{parse_verdict, verify_verdict};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.display().to_string(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn edge_list_seeds() {
    let mut parsed = 0;
    for (_, text) in seeds("edge_list") {
        if let Ok(d) = parse_edge_list(&text) {
            assert_eq!(parse_edge_list(&write_edge_list(&d)), Ok(d));
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn dot_seeds() {
    let mut parsed = 0;
    for (_, text) in seeds("dot") {
        let _ = parse_auto(&text);
        if let Ok(d) = parse_dot(&text) {
            assert_eq!(parse_dot(&write_dot(&d)), Ok(d));
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn verdict_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("verdict") {
        let v = parse_verdict(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        accepted += fixtures::all()
            .iter()
            .filter(|f| verify_verdict(&f.digraph, &v).is_ok())
            .count();
    }
    // The yes, cut-arc, catalog and misplaced-root seeds each fit a fixture.
    assert!(accepted >= 4, "{accepted}");
}
