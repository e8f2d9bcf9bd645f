//! Rooted trees, Edmonds-type cuts and out-branchings avoiding a path.

use serde::{Deserialize, Serialize};

use crate::config::Budgets;
use crate::digraph::{strong_decomposition, terminal_initial_sets, ArcPath, Digraph};
use crate::error::{Error, Result};
use crate::flow::max_flow;
use crate::structure::{
    arc_disjoint_path_pair_with, certificate_from_layers, detect_with, exhaustive_search,
    verify_type_certificate_within, PathPairOutcome, Query, TypeCertificate, TypeKind, TypeRoles,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeKind {
    /// Arcs point away from the root.
    Out,
    /// Arcs point towards the root.
    In,
}

/// A rooted out- or in-tree over a subset of `0..n`.
///
/// `parent[x]` is the in-neighbour of `x` in an out-tree and its
/// out-neighbour in an in-tree. A branching is a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    pub kind: TreeKind,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub covered: Vec<bool>,
}

impl Tree {
    pub fn trivial(n: usize, kind: TreeKind, root: usize) -> Self {
        let mut covered = vec![false; n];
        covered[root] = true;
        Tree {
            kind,
            root,
            parent: vec![None; n],
            covered,
        }
    }

    /// Builds a tree from its arcs. Arcs are `(tail, head)` in both kinds.
    pub fn from_arcs(
        n: usize,
        kind: TreeKind,
        root: usize,
        arcs: &[(usize, usize)],
    ) -> Result<Self, String> {
        if root >= n {
            return Err(format!("root {root} out of range"));
        }
        let mut t = Tree::trivial(n, kind, root);
        for &(a, b) in arcs {
            if a >= n || b >= n {
                return Err(format!("arc {a} -> {b} out of range"));
            }
            let (child, par) = match kind {
                TreeKind::Out => (b, a),
                TreeKind::In => (a, b),
            };
            if child == root || t.parent[child].is_some() {
                return Err(format!("vertex {child} gets a second tree parent"));
            }
            t.parent[child] = Some(par);
            t.covered[child] = true;
            t.covered[par] = true;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Sets the parent of an uncovered vertex.
    pub fn attach(&mut self, child: usize, par: usize) {
        debug_assert!(!self.covered[child] && self.covered[par]);
        self.parent[child] = Some(par);
        self.covered[child] = true;
    }

    /// Arc between a vertex and its parent, oriented as in the host digraph.
    pub fn arc_of(&self, x: usize) -> Option<(usize, usize)> {
        self.parent[x].map(|p| match self.kind {
            TreeKind::Out => (p, x),
            TreeKind::In => (x, p),
        })
    }

    /// Tree arcs, lexicographic.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut a: Vec<_> = (0..self.n()).filter_map(|x| self.arc_of(x)).collect();
        a.sort_unstable();
        a
    }

    pub fn covered_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.covered[x]).collect()
    }

    pub fn is_spanning(&self) -> bool {
        self.covered.iter().all(|&c| c)
    }

    /// Structural check against the host digraph.
    pub fn verify(&self, d: &Digraph) -> Result<(), String> {
        let n = d.n();
        if self.parent.len() != n || self.covered.len() != n {
            return Err(format!(
                "tree sized for {} vertices, digraph has {n}",
                self.parent.len()
            ));
        }
        if self.root >= n || !self.covered[self.root] {
            return Err("root not covered".into());
        }
        if self.parent[self.root].is_some() {
            return Err(format!("root {} has a parent", self.root));
        }
        for x in 0..n {
            match (self.covered[x], self.parent[x]) {
                (false, Some(_)) => return Err(format!("uncovered vertex {x} has a parent")),
                (true, None) if x != self.root => return Err(format!("vertex {x} has no parent")),
                (true, Some(p)) => {
                    if p >= n || !self.covered[p] {
                        return Err(format!("parent of {x} is not covered"));
                    }
                    let (a, b) = self.arc_of(x).expect("has parent");
                    if !d.has_arc(a, b) {
                        return Err(format!("tree arc {a} -> {b} is not an arc"));
                    }
                }
                _ => {}
            }
        }
        for x in 0..n {
            if !self.covered[x] {
                continue;
            }
            let mut y = x;
            let mut steps = 0;
            while let Some(p) = self.parent[y] {
                y = p;
                steps += 1;
                if steps > n {
                    return Err(format!("cycle through the parent of {x}"));
                }
            }
            if y != self.root {
                return Err(format!("vertex {x} does not lead to the root"));
            }
        }
        Ok(())
    }

    /// Relabels vertices through `map` into a host with `n` vertices.
    pub fn lift(&self, map: &[usize], n: usize) -> Tree {
        let mut t = Tree::trivial(n, self.kind, map[self.root]);
        for x in 0..self.n() {
            if self.covered[x] {
                t.covered[map[x]] = true;
            }
            if let Some(p) = self.parent[x] {
                t.parent[map[x]] = Some(map[p]);
            }
        }
        t
    }

    /// The same arcs read in the reversed digraph (out-trees become in-trees
    /// and vice versa).
    pub fn reversed(&self) -> Tree {
        Tree {
            kind: match self.kind {
                TreeKind::Out => TreeKind::In,
                TreeKind::In => TreeKind::Out,
            },
            ..self.clone()
        }
    }
}

/// BFS out-tree from `root` over the vertices it reaches.
pub fn bfs_out_tree(d: &Digraph, root: usize) -> Tree {
    let parent = d.bfs_out_tree(root);
    let mut t = Tree::trivial(d.n(), TreeKind::Out, root);
    for x in 0..d.n() {
        if let Some(p) = parent[x] {
            t.parent[x] = Some(p);
            t.covered[x] = true;
        }
    }
    t
}

/// BFS in-tree to `root` over the vertices reaching it.
pub fn bfs_in_tree(d: &Digraph, root: usize) -> Tree {
    bfs_out_tree(&d.reversed(), root).reversed()
}

/// A nonempty `X` not containing the root with `d⁻(X) = indegree < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficientSet {
    pub set: Vec<usize>,
    pub indegree: usize,
}

impl DeficientSet {
    pub fn verify(&self, d: &Digraph, s: usize, k: usize) -> Result<(), String> {
        let n = d.n();
        let mut inside = vec![false; n];
        for &x in &self.set {
            if x >= n {
                return Err(format!("vertex {x} out of range"));
            }
            inside[x] = true;
        }
        if self.set.is_empty() || inside[s] {
            return Err("set must be nonempty and avoid the root".into());
        }
        let indeg = d
            .arcs()
            .into_iter()
            .filter(|&(a, b)| !inside[a] && inside[b])
            .count();
        if indeg != self.indegree || indeg >= k {
            return Err(format!(
                "in-degree is {indeg}, claimed {}, bound {k}",
                self.indegree
            ));
        }
        Ok(())
    }
}

/// The first vertex `t` (ascending) with fewer than `k` arc-disjoint
/// `(s, t)`-paths gives the smallest minimum cut around `t`.
pub fn edmonds_deficiency(d: &Digraph, s: usize, k: usize) -> Option<DeficientSet> {
    if k == 0 {
        return None;
    }
    for t in (0..d.n()).filter(|&t| t != s) {
        let f = max_flow(d, &[s], &[t], k);
        if f.value < k {
            let side = f.sink_side(d, &[t]);
            let set: Vec<usize> = (0..d.n()).filter(|&x| side[x]).collect();
            return Some(DeficientSet {
                set,
                indegree: f.value,
            });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoBranchings {
    Pair(Tree, Tree),
    Deficient(DeficientSet),
}

/// Two arc-disjoint out-branchings rooted at `s`, or a deficient set.
///
/// The first branching grows one arc at a time, accepting an arc only if
/// `s` still reaches every vertex once the tree's arcs are deleted. This
/// invariant alone suffices: under the cut condition an acceptable arc
/// always exists. The second branching is a BFS tree of what remains.
pub fn two_arc_disjoint_out_branchings(d: &Digraph, s: usize) -> Result<TwoBranchings> {
    let n = d.n();
    if s >= n {
        return Err(Error::VertexOutOfRange { vertex: s, n });
    }
    if let Some(x) = edmonds_deficiency(d, s, 2) {
        return Ok(TwoBranchings::Deficient(x));
    }
    let mut b1 = Tree::trivial(n, TreeKind::Out, s);
    let mut residual = d.clone();
    let mut size = 1;
    while size < n {
        let bfs = residual.bfs_out_tree(s);
        let mut candidates = Vec::new();
        for a in (0..n).filter(|&a| b1.covered[a]) {
            for b in (0..n).filter(|&b| !b1.covered[b] && residual.has_arc(a, b)) {
                candidates.push((a, b));
            }
        }
        let pick = candidates
            .iter()
            .copied()
            .find(|&(a, b)| bfs[b] != Some(a))
            .or_else(|| {
                candidates.iter().copied().find(|&(a, b)| {
                    residual.remove_arc(a, b);
                    let ok = residual.reach_from(&[s]).iter().all(|&r| r);
                    residual.add_arc(a, b).expect("restore arc");
                    ok
                })
            })
            .ok_or_else(|| {
                Error::InternalInconsistency("no extendable arc for the first branching".into())
            })?;
        residual.remove_arc(pick.0, pick.1);
        b1.attach(pick.1, pick.0);
        size += 1;
    }
    let b2 = bfs_out_tree(&residual, s);
    for t in [&b1, &b2] {
        t.verify(d).map_err(Error::InternalInconsistency)?;
        if !t.is_spanning() {
            return Err(Error::InternalInconsistency(
                "branching is not spanning".into(),
            ));
        }
    }
    Ok(TwoBranchings::Pair(b1, b2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchingPathOutcome {
    /// An out-branching rooted at `u` and an arc-disjoint `(w, v)`-path.
    Pair { branching: Tree, path: ArcPath },
    /// A layered structure over `V(D)` or over `Out(D)`.
    Obstruction(TypeCertificate),
}

/// Checks an obstruction returned by [`out_branching_vs_path`].
pub fn verify_branching_path_obstruction(
    d: &Digraph,
    (u, w, v): (usize, usize, usize),
    cert: &TypeCertificate,
) -> Result<(), String> {
    if cert.roles != (TypeRoles { u, w: Some(w), v }) {
        return Err("roles do not match".into());
    }
    verify_type_certificate_within(d, cert)?;
    let mut inside = vec![false; d.n()];
    for p in &cert.parts {
        for &x in p {
            inside[x] = true;
        }
    }
    if inside.iter().all(|&x| x) {
        return Ok(());
    }
    let (out, _) = terminal_initial_sets(d);
    let mut out_mask = vec![false; d.n()];
    for x in out {
        out_mask[x] = true;
    }
    if inside != out_mask {
        return Err("parts cover neither V(D) nor Out(D)".into());
    }
    Ok(())
}

fn check_pair(d: &Digraph, u: usize, w: usize, v: usize, b: &Tree, p: &ArcPath) -> Result<()> {
    let bad = |m: String| Err(Error::InternalInconsistency(m));
    if let Err(m) = b.verify(d) {
        return bad(m);
    }
    if b.kind != TreeKind::Out || b.root != u || !b.is_spanning() {
        return bad("not a spanning out-branching at u".into());
    }
    if let Err(m) = p.verify(d) {
        return bad(m);
    }
    if (p.start(), p.end()) != (w, v) {
        return bad("path endpoints differ".into());
    }
    let arcs = b.arcs();
    if let Some(e) = p.arcs().find(|e| arcs.binary_search(e).is_ok()) {
        return bad(format!("arc {:?} shared by branching and path", e));
    }
    Ok(())
}

fn two_part(d: &Digraph, v1: &[bool], roles: TypeRoles) -> Option<TypeCertificate> {
    let n = d.n();
    let p1: Vec<usize> = (0..n).filter(|&x| v1[x]).collect();
    let p2: Vec<usize> = (0..n).filter(|&x| !v1[x]).collect();
    certificate_from_layers(d, vec![p1, p2], roles)
}

/// Detection half: the structures under which no pair exists.
fn branching_path_obstruction(
    d: &Digraph,
    (u, w, v): (usize, usize, usize),
    budgets: Budgets,
) -> Option<TypeCertificate> {
    let n = d.n();
    let roles = TypeRoles { u, w: Some(w), v };
    let (out, _) = terminal_initial_sets(d);
    if out == [u] && w == u && d.in_neighbors(v).eq([u]) {
        let mut v1 = vec![false; n];
        v1[v] = true;
        if let Some(c) = two_part(d, &v1, roles) {
            return Some(c);
        }
    }
    if ![u, w, v].iter().all(|x| out.contains(x)) {
        return None;
    }
    let sub = d.induced(&out);
    let local = |x: usize| out.iter().position(|&y| y == x).expect("in Out(D)");
    let q = Query::all(local(u), local(w), local(v), None);
    let found = detect_with(&sub, &q).or_else(|| {
        if sub.n() <= budgets.exhaustive_n {
            exhaustive_search(&sub, &q)
        } else {
            None
        }
    })?;
    let mut parts: Vec<Vec<usize>> = found
        .parts
        .iter()
        .map(|p| p.iter().map(|&x| out[x]).collect())
        .collect();
    if found.kind == TypeKind::A {
        // Later components send no arc back into Out(D).
        parts[1].extend((0..n).filter(|x| !out.contains(x)));
    }
    certificate_from_layers(d, parts, roles)
}

/// An out-branching rooted at `u` arc-disjoint from some `(w, v)`-path, or
/// the structure preventing it.
pub fn out_branching_vs_path(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
) -> Result<BranchingPathOutcome> {
    out_branching_vs_path_with(d, u, w, v, Budgets::from_env())
}

pub fn out_branching_vs_path_with(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
    budgets: Budgets,
) -> Result<BranchingPathOutcome> {
    let n = d.n();
    for x in [u, w, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if !d.reach_from(&[u]).iter().all(|&r| r) {
        return Err(Error::PreconditionViolated(format!("{u} is not in Out(D)")));
    }
    if !d.reach_from(&[w])[v] {
        return Err(Error::PreconditionViolated(format!("no ({w},{v})-path")));
    }
    if let Some(c) = branching_path_obstruction(d, (u, w, v), budgets) {
        verify_branching_path_obstruction(d, (u, w, v), &c)
            .map_err(Error::InternalInconsistency)?;
        return Ok(BranchingPathOutcome::Obstruction(c));
    }
    let out = construct_branching_path(d, u, w, v, budgets)?;
    match &out {
        BranchingPathOutcome::Pair { branching, path } => check_pair(d, u, w, v, branching, path)?,
        BranchingPathOutcome::Obstruction(c) => verify_branching_path_obstruction(d, (u, w, v), c)
            .map_err(Error::InternalInconsistency)?,
    }
    Ok(out)
}

/// BFS out-tree of `D<set>` from `root`, lifted to `d`'s labels.
fn tree_within(d: &Digraph, set: &[usize], root: usize) -> Tree {
    let sub = d.induced(set);
    let local_root = set.iter().position(|&x| x == root).expect("root in set");
    bfs_out_tree(&sub, local_root).lift(set, d.n())
}

fn mask_to_vec(mask: &[bool], want: bool) -> Vec<usize> {
    (0..mask.len()).filter(|&x| mask[x] == want).collect()
}

fn construct_branching_path(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
    budgets: Budgets,
) -> Result<BranchingPathOutcome> {
    let n = d.n();
    let roles = TypeRoles { u, w: Some(w), v };
    let inconsistent =
        |m: &str| Error::InternalInconsistency(format!("branching/path ({u},{w},{v}): {m}"));
    if u == w {
        if v == u {
            let b = match two_arc_disjoint_out_branchings(d, u)? {
                TwoBranchings::Pair(b, _) => b,
                TwoBranchings::Deficient(_) => tree_within(d, &(0..n).collect::<Vec<_>>(), u),
            };
            return Ok(BranchingPathOutcome::Pair {
                branching: b,
                path: ArcPath::trivial(u),
            });
        }
        let x = match two_arc_disjoint_out_branchings(d, u)? {
            TwoBranchings::Pair(b1, b2) => {
                let path = tree_path(&b2, v);
                return Ok(BranchingPathOutcome::Pair {
                    branching: b1,
                    path,
                });
            }
            TwoBranchings::Deficient(x) => x,
        };
        let mut in_u1 = vec![false; n];
        for &a in &x.set {
            in_u1[a] = true;
        }
        if in_u1[v] {
            return two_part(d, &in_u1, roles)
                .map(BranchingPathOutcome::Obstruction)
                .ok_or_else(|| inconsistent("deficient set is not a type A split"));
        }
        let (xa, yb) = d
            .arcs()
            .into_iter()
            .find(|&(a, b)| !in_u1[a] && in_u1[b])
            .ok_or_else(|| inconsistent("no arc enters the deficient set"))?;
        let u2 = mask_to_vec(&in_u1, false);
        let u1 = mask_to_vec(&in_u1, true);
        let sub = d.induced(&u2);
        let l = |g: usize| u2.iter().position(|&y| y == g).expect("in U2");
        let (pux, puv) = match two_paths_to(&sub, l(u), l(xa), l(v)) {
            Ok(p) => p,
            Err(side) => {
                // Menger set: u's side with a single leaving arc.
                let mut v1 = vec![true; n];
                for (i, &g) in u2.iter().enumerate() {
                    if side[i] {
                        v1[g] = false;
                    }
                }
                return two_part(d, &v1, roles)
                    .map(BranchingPathOutcome::Obstruction)
                    .ok_or_else(|| inconsistent("Menger set is not a type A split"));
            }
        };
        let pux = ArcPath::new(pux.vertices.iter().map(|&i| u2[i]).collect());
        let puv = ArcPath::new(puv.vertices.iter().map(|&i| u2[i]).collect());
        let b = assemble(d, &pux, (xa, yb), &u1, &u2)?;
        return Ok(BranchingPathOutcome::Pair {
            branching: b,
            path: puv,
        });
    }

    // Auxiliary root s = n with arcs s -> u, s -> w.
    let mut aux = Digraph::new(n + 1);
    for (a, b) in d.arcs() {
        aux.add_arc(a, b).expect("copy arc");
    }
    aux.add_arc(n, u).expect("aux arc");
    aux.add_arc(n, w).expect("aux arc");
    let set = match two_arc_disjoint_out_branchings(&aux, n)? {
        TwoBranchings::Pair(b1, b2) => {
            let (bu, bw) = if b1.parent[u] == Some(n) {
                (b1, b2)
            } else {
                (b2, b1)
            };
            let mut branching = Tree::trivial(n, TreeKind::Out, u);
            for x in 0..n {
                if x != u {
                    branching.parent[x] = bu.parent[x];
                    branching.covered[x] = true;
                }
            }
            let full = tree_path(&bw, v);
            let path = ArcPath::new(full.vertices[1..].to_vec());
            return Ok(BranchingPathOutcome::Pair { branching, path });
        }
        TwoBranchings::Deficient(x) => x.set,
    };
    let mut in_v1 = vec![false; n];
    for &a in &set {
        in_v1[a] = true;
    }
    if in_v1[u] {
        // Nothing enters V1; V1 dominates the rest.
        let v1 = mask_to_vec(&in_v1, true);
        let v2 = mask_to_vec(&in_v1, false);
        let mut b = tree_within(d, &v1, u);
        for &r in &v2 {
            if !d.has_arc(u, r) {
                return Err(inconsistent("u does not dominate V2"));
            }
            b.attach(r, u);
        }
        let sub = d.induced(&v2);
        let l = |g: usize| v2.iter().position(|&y| y == g);
        let p = sub
            .shortest_path(
                l(w).ok_or_else(|| inconsistent("w in V1"))?,
                l(v).ok_or_else(|| inconsistent("v in V1"))?,
            )
            .ok_or_else(|| inconsistent("no (w,v)-path inside V2"))?;
        let path = ArcPath::new(p.vertices.iter().map(|&i| v2[i]).collect());
        return Ok(BranchingPathOutcome::Pair { branching: b, path });
    }
    if in_v1[w] {
        return Err(inconsistent("w alone in the deficient set"));
    }
    if in_v1[v] {
        return two_part(d, &in_v1, roles)
            .map(BranchingPathOutcome::Obstruction)
            .ok_or_else(|| inconsistent("deficient set is not a type A split"));
    }
    let (xa, yb) = d
        .arcs()
        .into_iter()
        .find(|&(a, b)| !in_v1[a] && in_v1[b])
        .ok_or_else(|| inconsistent("no arc enters the deficient set"))?;
    let v1 = mask_to_vec(&in_v1, true);
    let v2 = mask_to_vec(&in_v1, false);
    let sub = d.induced(&v2);
    let l = |g: usize| v2.iter().position(|&y| y == g).expect("in V2");
    if !sub.reach_from(&[l(w)])[l(v)] || !sub.reach_from(&[l(u)])[l(xa)] {
        return Err(inconsistent("base paths leave V2"));
    }
    match arc_disjoint_path_pair_with(&sub, l(u), l(xa), l(w), l(v), budgets)? {
        PathPairOutcome::Paths(p1, p2) => {
            let pux = ArcPath::new(p1.vertices.iter().map(|&i| v2[i]).collect());
            let pwv = ArcPath::new(p2.vertices.iter().map(|&i| v2[i]).collect());
            let b = assemble(d, &pux, (xa, yb), &v1, &v2)?;
            Ok(BranchingPathOutcome::Pair {
                branching: b,
                path: pwv,
            })
        }
        PathPairOutcome::Obstruction(_) => Err(inconsistent("path pair inside V2 is obstructed")),
    }
}

/// `P_{u,x} + xy + B⁺_{y,D<U1>} + {yr : r in U2 - V(P)}`.
fn assemble(
    d: &Digraph,
    pux: &ArcPath,
    (x, y): (usize, usize),
    u1: &[usize],
    u2: &[usize],
) -> Result<Tree> {
    let n = d.n();
    let mut b = tree_within(d, u1, y);
    b.root = pux.start();
    b.parent[y] = Some(x);
    for (a, c) in pux.arcs() {
        b.parent[c] = Some(a);
        b.covered[c] = true;
    }
    b.covered[pux.start()] = true;
    b.parent[pux.start()] = None;
    for &r in u2 {
        if !b.covered[r] {
            if !d.has_arc(y, r) {
                return Err(Error::InternalInconsistency(format!(
                    "{y} does not dominate {r}"
                )));
            }
            b.parent[r] = Some(y);
            b.covered[r] = true;
        }
    }
    debug_assert_eq!(b.n(), n);
    Ok(b)
}

/// Root-to-`x` path in an out-tree.
fn tree_path(t: &Tree, x: usize) -> ArcPath {
    let mut v = vec![x];
    let mut y = x;
    while let Some(p) = t.parent[y] {
        v.push(p);
        y = p;
    }
    v.reverse();
    ArcPath::new(v)
}

/// Arc-disjoint `(s, x)`- and `(s, v)`-paths, or the source side of a
/// minimum cut when they do not exist.
fn two_paths_to(
    d: &Digraph,
    s: usize,
    x: usize,
    v: usize,
) -> Result<(ArcPath, ArcPath), Vec<bool>> {
    let n = d.n();
    if x == v {
        let f = max_flow(d, &[s], &[x], 2);
        if f.value < 2 {
            return Err(f.source_side);
        }
        let ps = f.paths(&[s], &[x]);
        return Ok((ps[0].clone(), ps[1].clone()));
    }
    if s == x || s == v {
        let other = if s == x { v } else { x };
        let p = d
            .shortest_path(s, other)
            .ok_or_else(|| d.reach_from(&[s]))?;
        let t = ArcPath::trivial(s);
        return Ok(if s == x { (t, p) } else { (p, t) });
    }
    // Sink t = n fed by x and v.
    let mut aux = Digraph::new(n + 1);
    for (a, b) in d.arcs() {
        aux.add_arc(a, b).expect("copy arc");
    }
    aux.add_arc(x, n).expect("aux arc");
    aux.add_arc(v, n).expect("aux arc");
    let f = max_flow(&aux, &[s], &[n], 2);
    if f.value < 2 {
        return Err(f.source_side[..n].to_vec());
    }
    let ps = f.paths(&[s], &[n]);
    let trim = |p: &ArcPath| ArcPath::new(p.vertices[..p.vertices.len() - 1].to_vec());
    let (a, b) = (trim(&ps[0]), trim(&ps[1]));
    Ok(if a.end() == x { (a, b) } else { (b, a) })
}

/// Whether the two branchings share no arc.
pub fn arc_disjoint(a: &Tree, b: &Tree) -> bool {
    let x = a.arcs();
    b.arcs().iter().all(|e| x.binary_search(e).is_err())
}

/// `u`'s strong component is initial when some out-branching exists.
pub fn has_out_branching(d: &Digraph, u: usize) -> bool {
    strong_decomposition(d).in_initial(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::{verify_type_certificate, TypeKind};

    #[test]
    fn deficiency_examples() {
        let c3 = fixtures::c3().digraph;
        assert_eq!(
            edmonds_deficiency(&c3, 0, 2),
            Some(DeficientSet {
                set: vec![1],
                indegree: 1
            })
        );
        assert_eq!(edmonds_deficiency(&fixtures::s4().digraph, 0, 2), None);
        assert_eq!(edmonds_deficiency(&c3, 0, 0), None);
    }

    #[test]
    fn two_branchings() {
        let k3 = fixtures::k3().digraph;
        match two_arc_disjoint_out_branchings(&k3, 0).unwrap() {
            TwoBranchings::Pair(a, b) => assert!(arc_disjoint(&a, &b)),
            other => panic!("{other:?}"),
        }
        let s4 = fixtures::s4().digraph;
        assert!(matches!(
            two_arc_disjoint_out_branchings(&s4, 2).unwrap(),
            TwoBranchings::Pair(..)
        ));
        let c3 = fixtures::c3().digraph;
        match two_arc_disjoint_out_branchings(&c3, 0).unwrap() {
            TwoBranchings::Deficient(x) => assert_eq!(x.set, vec![1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn branching_vs_path_examples() {
        let a = fixtures::fig_a().digraph;
        match out_branching_vs_path(&a, 0, 0, 1).unwrap() {
            BranchingPathOutcome::Obstruction(c) => {
                assert_eq!(c.kind, TypeKind::A);
                assert_eq!(c.parts[0], vec![1]);
            }
            other => panic!("{other:?}"),
        }
        let k3 = fixtures::k3().digraph;
        assert!(matches!(
            out_branching_vs_path(&k3, 0, 2, 1).unwrap(),
            BranchingPathOutcome::Pair { .. }
        ));
        let t = fixtures::typea3().digraph;
        match out_branching_vs_path(&t, 0, 1, 2).unwrap() {
            BranchingPathOutcome::Obstruction(c) => {
                assert_eq!(c.parts, vec![vec![2], vec![0, 1]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn branching_vs_path_preconditions() {
        let b = fixtures::fig_b().digraph;
        assert!(matches!(
            out_branching_vs_path(&b, 1, 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            out_branching_vs_path(&b, 0, 2, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn tree_verification() {
        let c3 = fixtures::c3().digraph;
        let t = Tree::from_arcs(3, TreeKind::Out, 0, &[(0, 1), (1, 2)]).unwrap();
        t.verify(&c3).unwrap();
        let bad = Tree::from_arcs(3, TreeKind::Out, 0, &[(0, 2)]).unwrap();
        assert!(bad.verify(&c3).is_err());
        let cyc = Tree {
            kind: TreeKind::Out,
            root: 0,
            parent: vec![None, Some(2), Some(1)],
            covered: vec![true; 3],
        };
        assert!(cyc.verify(&Digraph::complete(3)).is_err());
        let it = Tree::from_arcs(3, TreeKind::In, 0, &[(2, 0), (1, 2)]).unwrap();
        it.verify(&c3).unwrap();
        assert_eq!(it.arcs(), vec![(1, 2), (2, 0)]);
    }

    #[test]
    fn verify_cert_accepts_full_cover() {
        let t = fixtures::typea3().digraph;
        if let BranchingPathOutcome::Obstruction(c) = out_branching_vs_path(&t, 0, 1, 2).unwrap() {
            verify_type_certificate(&t, &c).unwrap();
        }
    }
}
