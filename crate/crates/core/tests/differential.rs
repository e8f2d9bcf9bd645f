//! Decision, construction and certificates against brute force.

use semibranch::branchings::{
    out_branching_vs_path, verify_branching_path_obstruction, BranchingPathOutcome,
};
use semibranch::goodpair::{
    construct_good_pair, verify_no_pair_certificate, Construction, Decision,
};
use semibranch::oracle::{
    enumerate_semicomplete, oracle_branching_path, oracle_good_pair, random_semicomplete,
    Constraint, GeneratorConfig,
};
use semibranch::{decide_good_pair, verify_good_pair, Digraph};

fn check_roots(d: &Digraph, u: usize, v: usize) {
    let expected = oracle_good_pair(d, u, v).unwrap().is_some();
    match construct_good_pair(d, u, v).unwrap() {
        Construction::Pair(p) => {
            assert!(expected, "pair built where none exists: {d:?} ({u},{v})");
            verify_good_pair(d, u, v, &p).unwrap();
        }
        Construction::NoPair(c) => {
            assert!(!expected, "{d:?} ({u},{v}) has a pair, got {}", c.label());
            verify_no_pair_certificate(d, u, v, &c).unwrap();
        }
    }
}

#[test]
fn all_small_digraphs() {
    for n in 1..=4 {
        for d in enumerate_semicomplete(n).unwrap() {
            for u in 0..n {
                for v in 0..n {
                    check_roots(&d, u, v);
                }
            }
        }
    }
}

#[test]
fn random_strong_digraphs() {
    for seed in 0..300u64 {
        let n = 5 + (seed % 3) as usize;
        let cfg = GeneratorConfig::new(n, 0.3, seed, Constraint::Strong);
        let d = random_semicomplete(&cfg).unwrap();
        let (u, v) = ((seed as usize) % n, (seed as usize / 3) % n);
        check_roots(&d, u, v);
        let dec = decide_good_pair(&d, u, v).unwrap();
        assert_eq!(
            dec == Decision::Yes,
            oracle_good_pair(&d, u, v).unwrap().is_some()
        );
    }
}

#[test]
fn branching_against_path_small() {
    for n in 2..=4 {
        for d in enumerate_semicomplete(n).unwrap() {
            for u in 0..n {
                for w in 0..n {
                    for v in (0..n).filter(|&v| v != w) {
                        let Ok(out) = out_branching_vs_path(&d, u, w, v) else {
                            continue;
                        };
                        let expected = oracle_branching_path(&d, u, w, v).unwrap().is_some();
                        match out {
                            BranchingPathOutcome::Pair { .. } => {
                                assert!(expected, "{d:?} {u} {w} {v}")
                            }
                            BranchingPathOutcome::Obstruction(c) => {
                                assert!(!expected, "{d:?} {u} {w} {v}");
                                verify_branching_path_obstruction(&d, (u, w, v), &c).unwrap();
                            }
                        }
                    }
                }
            }
        }
    }
}
