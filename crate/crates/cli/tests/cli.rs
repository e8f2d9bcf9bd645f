use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semibranch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn decide_examples() {
    let o = run(&["decide", "--fixture", "S4", "-u", "0", "-v", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "yes");

    let o = run(&["decide", "--fixture", "FIG_A", "-u", "0", "-v", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).starts_with("no SmallException(a)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn sweep_four() {
    let o = run(&["sweep", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("11664 decisions"), "{}", stdout(&o));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (fixture, u, v, code) in [
        ("S4", "1", "2", 0),
        ("CHAIN4", "3", "1", 1),
        ("FIG_D", "0", "3", 1),
        ("K3", "2", "2", 0),
    ] {
        let o = run(&[
            "--output",
            "json",
            "construct",
            "--fixture",
            fixture,
            "-u",
            u,
            "-v",
            v,
        ]);
        assert_eq!(o.status.code(), Some(code), "{fixture}");
        let text = stdout(&o);
        assert!(text.starts_with("{\"schema\":1,"), "{text}");
        let path = dir.path().join(format!("{fixture}.json"));
        std::fs::write(&path, &text).unwrap();
        let o = run(&[
            "verify",
            "--fixture",
            fixture,
            "--verdict",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{fixture}: {}", stdout(&o));
        // The same verdict does not fit another instance.
        let o = run(&[
            "verify",
            "--fixture",
            "C3",
            "--verdict",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(1), "{fixture} against C3");
    }
}

#[test]
fn input_errors() {
    assert_eq!(
        run(&["decide", "--fixture", "K3", "-u", "0", "-v", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["decide", "--fixture", "NOPE", "-u", "0", "-v", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["decide", "-u", "0", "-v", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 1\n").unwrap();
    // Parses, but vertex 2 is not adjacent to anything.
    let o = run(&["decide", bad.to_str().unwrap(), "-u", "0", "-v", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let dot = dir.path().join("bad.dot");
    std::fs::write(&dot, "digraph { 0 -> 1 [color=red]; }").unwrap();
    assert_eq!(
        run(&["validate", dot.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn files_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "fixtures",
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s4 = dir.path().join("S4.dot");
    let o = run(&["validate", s4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("n = 4"));

    let o = run(&[
        "random",
        "--n",
        "6",
        "--seed",
        "11",
        "--constraint",
        "strong",
        "--digon-prob",
        "0.2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let again = run(&[
        "random",
        "--n",
        "6",
        "--seed",
        "11",
        "--constraint",
        "strong",
        "--digon-prob",
        "0.2",
    ]);
    assert_eq!(o.stdout, again.stdout);
    let file = dir.path().join("r.txt");
    std::fs::write(&file, &o.stdout).unwrap();
    let o = run(&["--output", "json", "validate", file.to_str().unwrap()]);
    assert!(stdout(&o).contains("\"strong\":true"), "{}", stdout(&o));
}

#[test]
fn paths_and_detect() {
    let o = run(&[
        "paths",
        "--fixture",
        "K3",
        "--x1",
        "0",
        "--y1",
        "1",
        "--x2",
        "1",
        "--y2",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "paths",
        "--fixture",
        "FIG_A",
        "--x1",
        "0",
        "--y1",
        "1",
        "--x2",
        "0",
        "--y2",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("consecutive_singletons"));
    let o = run(&[
        "--output",
        "json",
        "detect",
        "--fixture",
        "TYPEA3",
        "-u",
        "0",
        "-w",
        "1",
        "-v",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"kind\":\"a\""));
    let o = run(&["detect", "--fixture", "S4", "-u", "0", "-w", "1", "-v", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn budget_override() {
    // S4 has no cut arc, so its construction goes through the search.
    let starved = |via_env: bool| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_semibranch"));
        if via_env {
            c.env("SEMIBRANCH_SEARCH_NODES", "0");
            c.args(["construct"]);
        } else {
            c.args(["--search-nodes", "0", "construct"]);
        }
        c.args(["--fixture", "S4", "-u", "0", "-v", "3"])
            .output()
            .unwrap()
    };
    for via_env in [true, false] {
        let o = starved(via_env);
        assert_eq!(o.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    }
}
