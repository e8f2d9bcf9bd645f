//! Dense digraph representation and connectivity primitives.
//!
//! Vertices are the integers `0..n`. Arcs are stored in an `n x n`
//! adjacency matrix, so both pair queries and arc removal are O(1). All
//! iteration is in ascending vertex order, which makes every downstream
//! construction deterministic.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// State of an unordered vertex pair `{a, b}` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairState {
    None,
    /// Only `a -> b`.
    Forward,
    /// Only `b -> a`.
    Backward,
    /// Digon.
    Both,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a digraph from an arc list, rejecting loops, parallel arcs and
    /// out-of-range endpoints.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(a, b) in arcs {
            d.add_arc(a, b)?;
        }
        Ok(d)
    }

    /// The complete digraph (every pair is a digon).
    pub fn complete(n: usize) -> Self {
        let mut d = Digraph::new(n);
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    d.adj[a * n + b] = true;
                }
            }
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::Loop(a));
        }
        let slot = &mut self.adj[a * self.n + b];
        if *slot {
            return Err(Error::ParallelArc(a, b));
        }
        *slot = true;
        Ok(())
    }

    /// Removes `a -> b` if present; returns whether it was present.
    pub fn remove_arc(&mut self, a: usize, b: usize) -> bool {
        if a >= self.n || b >= self.n {
            return false;
        }
        std::mem::replace(&mut self.adj[a * self.n + b], false)
    }

    #[inline]
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a * self.n + b]
    }

    pub fn pair_state(&self, a: usize, b: usize) -> PairState {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        match (self.has_arc(lo, hi), self.has_arc(hi, lo)) {
            (false, false) => PairState::None,
            (true, false) => PairState::Forward,
            (false, true) => PairState::Backward,
            (true, true) => PairState::Both,
        }
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x).count()
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.adj[a * self.n + b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn out_neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&b| self.adj[a * n + b])
    }

    pub fn in_neighbors(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&a| self.adj[a * n + b])
    }

    pub fn out_degree(&self, a: usize) -> usize {
        self.out_neighbors(a).count()
    }

    pub fn in_degree(&self, b: usize) -> usize {
        self.in_neighbors(b).count()
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        let mut r = Digraph::new(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                r.adj[b * self.n + a] = self.adj[a * self.n + b];
            }
        }
        r
    }

    pub fn without_arc(&self, a: usize, b: usize) -> Self {
        let mut d = self.clone();
        d.remove_arc(a, b);
        d
    }

    pub fn without_arcs(&self, arcs: &[(usize, usize)]) -> Self {
        let mut d = self.clone();
        for &(a, b) in arcs {
            d.remove_arc(a, b);
        }
        d
    }

    /// Induced subdigraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut d = Digraph::new(k);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_arc(a, b) {
                    d.adj[i * k + j] = true;
                }
            }
        }
        d
    }

    /// Vertices reachable from any of `sources`.
    pub fn reach_from(&self, sources: &[usize]) -> Vec<bool> {
        self.bfs(sources, false)
    }

    /// Vertices that can reach any of `targets`.
    pub fn reach_to(&self, targets: &[usize]) -> Vec<bool> {
        self.bfs(targets, true)
    }

    fn bfs(&self, start: &[usize], backwards: bool) -> Vec<bool> {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in start {
            if s < n && !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                let arc = if backwards {
                    self.adj[y * n + x]
                } else {
                    self.adj[x * n + y]
                };
                if arc && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// BFS parent table from `root`: `parent[x]` is the predecessor of `x` on
    /// a shortest `(root, x)`-path.
    pub fn bfs_out_tree(&self, root: usize) -> Vec<Option<usize>> {
        self.bfs_tree(root, false)
    }

    /// BFS successor table towards `root` along shortest `(x, root)`-paths.
    pub fn bfs_in_tree(&self, root: usize) -> Vec<Option<usize>> {
        self.bfs_tree(root, true)
    }

    fn bfs_tree(&self, root: usize, backwards: bool) -> Vec<Option<usize>> {
        let n = self.n;
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                let arc = if backwards {
                    self.adj[y * n + x]
                } else {
                    self.adj[x * n + y]
                };
                if arc && !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// BFS distances from `root` (or to `root` when `backwards`);
    /// `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, root: usize, backwards: bool) -> Vec<usize> {
        let n = self.n;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                let arc = if backwards {
                    self.adj[y * n + x]
                } else {
                    self.adj[x * n + y]
                };
                if arc && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// A shortest `(from, to)`-path, if any.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<ArcPath> {
        if from >= self.n || to >= self.n {
            return None;
        }
        let parent = self.bfs_out_tree(from);
        if from != to && parent[to].is_none() {
            return None;
        }
        let mut vertices = vec![to];
        let mut x = to;
        while x != from {
            x = parent[x]?;
            vertices.push(x);
        }
        vertices.reverse();
        Some(ArcPath { vertices })
    }

    pub fn is_strong(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_from(&[0]).iter().all(|&x| x) && self.reach_to(&[0]).iter().all(|&x| x)
    }
}

/// Proof of a successful semicompleteness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemicompleteWitness {
    pub n: usize,
    pub arcs: usize,
    pub digons: usize,
}

/// Checks that every unordered pair is adjacent. On failure reports the first
/// non-adjacent pair in lexicographic order.
pub fn validate_semicomplete(d: &Digraph) -> Result<SemicompleteWitness> {
    let mut digons = 0;
    for a in 0..d.n() {
        for b in a + 1..d.n() {
            match d.pair_state(a, b) {
                PairState::None => return Err(Error::NonAdjacentPair { a, b }),
                PairState::Both => digons += 1,
                _ => {}
            }
        }
    }
    Ok(SemicompleteWitness {
        n: d.n(),
        arcs: d.arc_count(),
        digons,
    })
}

pub(crate) fn require_semicomplete(d: &Digraph) -> Result<()> {
    validate_semicomplete(d).map(|_| ()).map_err(|e| match e {
        Error::NonAdjacentPair { a, b } => Error::NotSemicomplete { a, b },
        other => other,
    })
}

/// A simple directed path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcPath {
    pub vertices: Vec<usize>,
}

impl ArcPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        ArcPath { vertices }
    }

    pub fn trivial(x: usize) -> Self {
        ArcPath { vertices: vec![x] }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("path has at least one vertex")
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        ArcPath { vertices }
    }

    /// Checks arc membership and that no vertex repeats.
    pub fn verify(&self, d: &Digraph) -> Result<(), String> {
        if self.vertices.is_empty() {
            return Err("empty path".into());
        }
        let mut seen = vec![false; d.n()];
        for &x in &self.vertices {
            if x >= d.n() {
                return Err(format!("vertex {x} out of range"));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(format!("vertex {x} repeats"));
            }
        }
        for (a, b) in self.arcs() {
            if !d.has_arc(a, b) {
                return Err(format!("{a} -> {b} is not an arc"));
            }
        }
        Ok(())
    }
}

/// Strong components in acyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongDecomposition {
    /// Components `D_1..D_p`, each sorted ascending.
    pub components: Vec<Vec<usize>>,
    /// `comp_of[x]` is the index of the component containing `x`.
    pub comp_of: Vec<usize>,
}

impl StrongDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.components.len() <= 1
    }

    pub fn initial(&self) -> &[usize] {
        &self.components[0]
    }

    pub fn terminal(&self) -> &[usize] {
        self.components.last().expect("non-empty digraph")
    }

    pub fn in_initial(&self, x: usize) -> bool {
        self.comp_of[x] == 0
    }

    pub fn in_terminal(&self, x: usize) -> bool {
        self.comp_of[x] + 1 == self.components.len()
    }
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order and are reversed at the end, giving an acyclic ordering. For a
/// semicomplete digraph that ordering is the unique one.
pub fn strong_decomposition(d: &Digraph) -> StrongDecomposition {
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    // (vertex, next neighbour to scan)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (x, ref mut next)) = call.last_mut() {
            let mut descended = false;
            while *next < n {
                let y = *next;
                *next += 1;
                if !d.has_arc(x, y) {
                    continue;
                }
                if index[y] == usize::MAX {
                    index[y] = counter;
                    low[y] = counter;
                    counter += 1;
                    stack.push(y);
                    on_stack[y] = true;
                    call.push((y, 0));
                    descended = true;
                    break;
                } else if on_stack[y] {
                    low[x] = low[x].min(index[y]);
                }
            }
            if descended {
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[x]);
            }
            if low[x] == index[x] {
                let mut comp = Vec::new();
                loop {
                    let y = stack.pop().expect("tarjan stack");
                    on_stack[y] = false;
                    comp.push(y);
                    if y == x {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps.reverse();
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &x in c {
            comp_of[x] = i;
        }
    }
    StrongDecomposition {
        components: comps,
        comp_of,
    }
}

/// `Out(D)` (vertices reaching all others) and `In(D)` (vertices reached by
/// all others), each sorted ascending.
pub fn terminal_initial_sets(d: &Digraph) -> (Vec<usize>, Vec<usize>) {
    let n = d.n();
    let mut out_set = Vec::new();
    let mut in_set = Vec::new();
    for x in 0..n {
        if d.reach_from(&[x]).iter().all(|&r| r) {
            out_set.push(x);
        }
        if d.reach_to(&[x]).iter().all(|&r| r) {
            in_set.push(x);
        }
    }
    (out_set, in_set)
}

/// Arcs `e` of a strong digraph with `D - e` not strong, in lexicographic
/// order.
///
/// Every cut arc lies on every out-branching or every in-branching rooted at
/// vertex 0, so only the arcs of one BFS out-tree and one BFS in-tree need the
/// per-arc strongness recheck.
pub fn cut_arcs(d: &Digraph) -> Result<Vec<(usize, usize)>> {
    if !d.is_strong() {
        return Err(Error::NotStrong);
    }
    let n = d.n();
    if n <= 1 {
        return Ok(Vec::new());
    }
    let mut candidates = Vec::new();
    for (x, p) in d.bfs_out_tree(0).into_iter().enumerate() {
        if let Some(p) = p {
            candidates.push((p, x));
        }
    }
    for (x, s) in d.bfs_in_tree(0).into_iter().enumerate() {
        if let Some(s) = s {
            candidates.push((x, s));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    let mut scratch = d.clone();
    let mut out = Vec::new();
    for (a, b) in candidates {
        scratch.remove_arc(a, b);
        // D - ab is strong iff b is still reachable from a.
        if !scratch.reach_from(&[a])[b] {
            out.push((a, b));
        }
        scratch.add_arc(a, b).expect("restoring removed arc");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_arcs() {
        assert_eq!(Digraph::from_arcs(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Digraph::from_arcs(2, &[(0, 1), (0, 1)]),
            Err(Error::ParallelArc(0, 1))
        );
        assert!(matches!(
            Digraph::from_arcs(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn pair_states() {
        let d = Digraph::from_arcs(3, &[(0, 1), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(d.pair_state(0, 1), PairState::Forward);
        assert_eq!(d.pair_state(1, 0), PairState::Forward);
        assert_eq!(d.pair_state(0, 2), PairState::Backward);
        assert_eq!(d.pair_state(1, 2), PairState::Both);
        assert_eq!(d.arc_count(), 4);
    }

    #[test]
    fn semicomplete_validation() {
        assert!(validate_semicomplete(&c3()).is_ok());
        assert_eq!(
            validate_semicomplete(&Digraph::new(2)),
            Err(Error::NonAdjacentPair { a: 0, b: 1 })
        );
        let fig_a = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert!(validate_semicomplete(&fig_a).is_ok());
    }

    #[test]
    fn decomposition_of_transitive_triangle() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sd = strong_decomposition(&d);
        assert_eq!(sd.components, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(terminal_initial_sets(&d), (vec![0], vec![2]));
        assert_eq!(strong_decomposition(&c3()).components, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn decomposition_orders_digon_block_first() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (0, 2), (1, 2)]).unwrap();
        let sd = strong_decomposition(&d);
        assert_eq!(sd.components, vec![vec![0, 1], vec![2]]);
        assert!(sd.in_initial(1));
        assert!(sd.in_terminal(2));
    }

    #[test]
    fn cut_arcs_of_cycle_and_error_when_not_strong() {
        assert_eq!(cut_arcs(&c3()).unwrap(), vec![(0, 1), (1, 2), (2, 0)]);
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(cut_arcs(&d), Err(Error::NotStrong));
    }

    #[test]
    fn path_verification() {
        let d = c3();
        assert!(ArcPath::new(vec![0, 1, 2]).verify(&d).is_ok());
        assert!(ArcPath::new(vec![0, 2]).verify(&d).is_err());
        assert!(ArcPath::new(vec![0, 1, 2, 0]).verify(&d).is_err());
        assert_eq!(d.shortest_path(1, 0).unwrap().vertices, vec![1, 2, 0]);
        assert_eq!(d.shortest_path(2, 2).unwrap().vertices, vec![2]);
    }

    #[test]
    fn induced_and_reversed() {
        let d = c3();
        let sub = d.induced(&[2, 0]);
        assert_eq!(sub.arcs(), vec![(0, 1)]);
        assert_eq!(d.reversed().arcs(), vec![(0, 2), (1, 0), (2, 1)]);
    }
}
