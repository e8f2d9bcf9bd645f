//! Brute force ground truth and instance generators.
//!
//! Nothing here shares code with the decision procedures beyond the
//! digraph primitives, so agreement between the two is meaningful.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::branchings::{Tree, TreeKind};
use crate::digraph::{ArcPath, Digraph};
use crate::error::{Error, Result};
use crate::flow::is_k_arc_strong;
use crate::goodpair::GoodPair;

/// Largest order accepted by the brute-force searches.
pub const ORACLE_LIMIT: usize = 9;
/// Largest order accepted by [`enumerate_semicomplete`].
pub const ENUMERATION_LIMIT: usize = 6;
/// Rejection-sampling cap of [`random_semicomplete`].
pub const MAX_ATTEMPTS: usize = 100_000;

fn check_order(d: &Digraph, limit: usize) -> Result<()> {
    if d.n() > limit {
        return Err(Error::TooLarge { n: d.n(), limit });
    }
    Ok(())
}

/// Parent-assignment backtracking over out-branchings rooted at `root`.
/// `accept` sees the residual digraph with the partial tree's arcs removed
/// and prunes when it returns false; it is also the final test.
struct Enumerator<'a, F> {
    d: &'a Digraph,
    root: usize,
    parent: Vec<Option<usize>>,
    residual: Digraph,
    accept: F,
}

impl<F: FnMut(&Digraph) -> bool> Enumerator<'_, F> {
    fn creates_cycle(&self, child: usize, mut p: usize) -> bool {
        loop {
            if p == child {
                return true;
            }
            match self.parent[p] {
                Some(q) => p = q,
                None => return false,
            }
        }
    }

    fn go(&mut self, x: usize) -> bool {
        let n = self.d.n();
        if x == n {
            return true;
        }
        if x == self.root {
            return self.go(x + 1);
        }
        for p in 0..n {
            if p == x || !self.d.has_arc(p, x) || self.creates_cycle(x, p) {
                continue;
            }
            self.parent[x] = Some(p);
            self.residual.remove_arc(p, x);
            if (self.accept)(&self.residual) && self.go(x + 1) {
                return true;
            }
            self.residual.add_arc(p, x).expect("restore arc");
            self.parent[x] = None;
        }
        false
    }
}

/// First out-branching rooted at `root` (in parent-assignment order) whose
/// removal leaves a residual satisfying `accept`, with that residual.
fn find_out_branching<F: FnMut(&Digraph) -> bool>(
    d: &Digraph,
    root: usize,
    accept: F,
) -> Option<(Tree, Digraph)> {
    let mut e = Enumerator {
        d,
        root,
        parent: vec![None; d.n()],
        residual: d.clone(),
        accept,
    };
    if !(e.accept)(&e.residual) || !e.go(0) {
        return None;
    }
    let tree = Tree {
        kind: TreeKind::Out,
        root,
        parent: e.parent,
        covered: vec![true; d.n()],
    };
    Some((tree, e.residual))
}

/// BFS in-tree to `v`, computed independently of the library helpers.
fn in_tree_by_bfs(d: &Digraph, v: usize) -> Tree {
    let n = d.n();
    let mut t = Tree::trivial(n, TreeKind::In, v);
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(y) = queue.pop_front() {
        for x in 0..n {
            if !t.covered[x] && d.has_arc(x, y) {
                t.covered[x] = true;
                t.parent[x] = Some(y);
                queue.push_back(x);
            }
        }
    }
    t
}

fn all_reach(d: &Digraph, v: usize) -> bool {
    d.reach_to(&[v]).iter().all(|&r| r)
}

/// Exact search for a good `(u, v)`-pair.
pub fn oracle_good_pair(d: &Digraph, u: usize, v: usize) -> Result<Option<GoodPair>> {
    check_order(d, ORACLE_LIMIT)?;
    for x in [u, v] {
        if x >= d.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: d.n(),
            });
        }
    }
    Ok(
        find_out_branching(d, u, |r| all_reach(r, v)).map(|(out, residual)| GoodPair {
            out_branching: out,
            in_branching: in_tree_by_bfs(&residual, v),
        }),
    )
}

/// Exact search for an out-branching rooted at `u` and an arc-disjoint
/// `(w, v)`-path.
pub fn oracle_branching_path(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
) -> Result<Option<(Tree, ArcPath)>> {
    check_order(d, ORACLE_LIMIT)?;
    Ok(
        find_out_branching(d, u, |r| r.reach_from(&[w])[v]).map(|(out, residual)| {
            let p = residual
                .shortest_path(w, v)
                .expect("accepted residual has the path");
            (out, p)
        }),
    )
}

struct PathDfs {
    residual: Digraph,
    on: Vec<bool>,
    path: Vec<usize>,
    target: usize,
    second: (usize, usize),
}

impl PathDfs {
    fn go(&mut self, x: usize) -> bool {
        if x == self.target {
            return self.residual.reach_from(&[self.second.0])[self.second.1];
        }
        let n = self.residual.n();
        for y in 0..n {
            if self.on[y] || !self.residual.has_arc(x, y) {
                continue;
            }
            self.residual.remove_arc(x, y);
            self.on[y] = true;
            self.path.push(y);
            if self.go(y) {
                return true;
            }
            self.path.pop();
            self.on[y] = false;
            self.residual.add_arc(x, y).expect("restore arc");
        }
        false
    }
}

/// Exact search for arc-disjoint `(x1, y1)`- and `(x2, y2)`-paths, by
/// trying every simple first path.
pub fn oracle_path_pair(
    d: &Digraph,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
) -> Result<Option<(ArcPath, ArcPath)>> {
    check_order(d, ORACLE_LIMIT)?;
    let n = d.n();
    for x in [x1, y1, x2, y2] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut s = PathDfs {
        residual: d.clone(),
        on: vec![false; n],
        path: vec![x1],
        target: y1,
        second: (x2, y2),
    };
    s.on[x1] = true;
    if !s.go(x1) {
        return Ok(None);
    }
    let p2 = s.residual.shortest_path(x2, y2).expect("checked reachable");
    Ok(Some((ArcPath::new(s.path), p2)))
}

/// Number of labeled semicomplete digraphs on `n` vertices.
pub fn semicomplete_count(n: usize) -> u64 {
    3u64.pow((n * n.saturating_sub(1) / 2) as u32)
}

/// The digraph with enumeration index `index`.
///
/// Unordered pairs `a < b` are taken in lexicographic order, the first
/// pair being the most significant base-3 digit. Digit 0 is `a -> b`, 1 is
/// `b -> a`, 2 is both.
pub fn semicomplete_from_index(n: usize, index: u64) -> Result<Digraph> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if index >= semicomplete_count(n) {
        return Err(Error::PreconditionViolated(format!(
            "index {index} out of range for n = {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut d = Digraph::new(n);
    let mut rest = index;
    for &(a, b) in pairs.iter().rev() {
        let digit = rest % 3;
        rest /= 3;
        if digit != 1 {
            d.add_arc(a, b).expect("fresh pair");
        }
        if digit != 0 {
            d.add_arc(b, a).expect("fresh pair");
        }
    }
    Ok(d)
}

/// Inverse of [`semicomplete_from_index`].
pub fn semicomplete_index(d: &Digraph) -> Result<u64> {
    let n = d.n();
    let mut idx = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            let digit = match (d.has_arc(a, b), d.has_arc(b, a)) {
                (true, false) => 0,
                (false, true) => 1,
                (true, true) => 2,
                (false, false) => return Err(Error::NotSemicomplete { a, b }),
            };
            idx = idx * 3 + digit;
        }
    }
    Ok(idx)
}

/// All labeled semicomplete digraphs on `n` vertices in index order.
pub fn enumerate_semicomplete(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    enumerate_range(n, 0..semicomplete_count(n.min(ENUMERATION_LIMIT)))
}

/// The digraphs with indices in `range`, for work partitioning.
pub fn enumerate_range(
    n: usize,
    range: std::ops::Range<u64>,
) -> Result<impl Iterator<Item = Digraph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let end = range.end.min(semicomplete_count(n));
    Ok((range.start..end).map(move |i| semicomplete_from_index(n, i).expect("index in range")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    Any,
    Tournament,
    Strong,
    #[serde(rename = "2-arc-strong")]
    TwoArcStrong,
    NonStrong,
}

impl std::str::FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "any" => Ok(Constraint::Any),
            "tournament" => Ok(Constraint::Tournament),
            "strong" => Ok(Constraint::Strong),
            "2-arc-strong" => Ok(Constraint::TwoArcStrong),
            "non-strong" => Ok(Constraint::NonStrong),
            _ => Err(format!("unknown constraint `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    /// Probability that a pair gets both arcs. Ignored for tournaments.
    pub digon_prob: f64,
    pub seed: u64,
    pub constraint: Constraint,
}

impl GeneratorConfig {
    pub fn new(n: usize, digon_prob: f64, seed: u64, constraint: Constraint) -> Self {
        GeneratorConfig {
            n,
            digon_prob,
            seed,
            constraint,
        }
    }
}

fn satisfies(d: &Digraph, c: Constraint) -> bool {
    match c {
        Constraint::Any | Constraint::Tournament => true,
        Constraint::Strong => d.is_strong(),
        Constraint::TwoArcStrong => is_k_arc_strong(d, 2),
        Constraint::NonStrong => !d.is_strong(),
    }
}

/// Seeded random semicomplete digraph meeting the configured constraint.
pub fn random_semicomplete(cfg: &GeneratorConfig) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&cfg.digon_prob) {
        return Err(Error::PreconditionViolated(format!(
            "digon probability {} outside [0, 1]",
            cfg.digon_prob
        )));
    }
    let p = if cfg.constraint == Constraint::Tournament {
        0.0
    } else {
        cfg.digon_prob
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut d = Digraph::new(cfg.n);
        for a in 0..cfg.n {
            for b in a + 1..cfg.n {
                if rng.gen_bool(p) {
                    d.add_arc(a, b).expect("fresh pair");
                    d.add_arc(b, a).expect("fresh pair");
                } else if rng.gen_bool(0.5) {
                    d.add_arc(a, b).expect("fresh pair");
                } else {
                    d.add_arc(b, a).expect("fresh pair");
                }
            }
        }
        if satisfies(&d, cfg.constraint) {
            return Ok(d);
        }
    }
    Err(Error::ConstraintUnsatisfiable {
        attempts: MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn good_pair_examples() {
        let a = fixtures::fig_a().digraph;
        assert!(oracle_good_pair(&a, 0, 1).unwrap().is_none());
        let k3 = fixtures::k3().digraph;
        let p = oracle_good_pair(&k3, 0, 1).unwrap().unwrap();
        p.out_branching.verify(&k3).unwrap();
        p.in_branching.verify(&k3).unwrap();
        let s4 = fixtures::s4().digraph;
        for u in 0..4 {
            for v in 0..4 {
                assert!(
                    oracle_good_pair(&s4, u, v).unwrap().is_some(),
                    "S4 ({u},{v})"
                );
            }
        }
        assert!(matches!(
            oracle_good_pair(&Digraph::complete(10), 0, 1),
            Err(Error::TooLarge { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn path_pair_examples() {
        let c = fixtures::chain4().digraph;
        assert!(oracle_path_pair(&c, 3, 0, 2, 1).unwrap().is_none());
        let k3 = fixtures::k3().digraph;
        assert!(oracle_path_pair(&k3, 0, 1, 1, 0).unwrap().is_some());
        let t = fixtures::typea3().digraph;
        assert!(oracle_path_pair(&t, 0, 2, 1, 2).unwrap().is_none());
    }

    #[test]
    fn enumeration_counts_and_bijection() {
        assert_eq!(enumerate_semicomplete(2).unwrap().count(), 3);
        assert_eq!(enumerate_semicomplete(3).unwrap().count(), 27);
        assert_eq!(semicomplete_count(5), 59049);
        for (i, d) in enumerate_semicomplete(3).unwrap().enumerate() {
            assert_eq!(semicomplete_index(&d).unwrap(), i as u64);
        }
        assert_eq!(semicomplete_from_index(2, 0).unwrap().arcs(), vec![(0, 1)]);
        assert_eq!(semicomplete_from_index(2, 1).unwrap().arcs(), vec![(1, 0)]);
        assert_eq!(semicomplete_from_index(2, 2).unwrap().arc_count(), 2);
        assert!(enumerate_semicomplete(7).is_err());
    }

    #[test]
    fn generators() {
        let cfg = GeneratorConfig::new(4, 0.0, 1, Constraint::Tournament);
        let a = random_semicomplete(&cfg).unwrap();
        assert_eq!(a, random_semicomplete(&cfg).unwrap());
        assert_eq!(a.arc_count(), 6);
        let full = random_semicomplete(&GeneratorConfig::new(5, 1.0, 7, Constraint::Any)).unwrap();
        assert_eq!(full, Digraph::complete(5));
        let s = random_semicomplete(&GeneratorConfig::new(3, 0.3, 2, Constraint::Strong)).unwrap();
        assert!(s.is_strong());
        assert!(matches!(
            random_semicomplete(&GeneratorConfig::new(2, 0.0, 0, Constraint::TwoArcStrong)),
            Err(Error::ConstraintUnsatisfiable { .. })
        ));
        assert!(random_semicomplete(&GeneratorConfig::new(3, 1.5, 0, Constraint::Any)).is_err());
    }
}
