//! Layered obstructions to arc-disjoint path pairs.
//!
//! A 4-tuple `(D, u, w, v)` has one of the following layered shapes when `D`
//! admits no arc-disjoint `(u, z)`- and `(w, v)`-paths for `z` in the first
//! layer:
//!
//! - type A: `V1, V2` with `v in V1`, `u, w in V2` and exactly one arc from
//!   `V2` to `V1`;
//! - chains of `k >= 3` layers (`k = 3` is type B): all arcs between layers
//!   go forward except one *back arc* `V_{i+2} -> V_i` for each
//!   `i = 1..k-2`, running from the terminal component of `D<V_{i+2}>` to the
//!   initial component of `D<V_i>`. Roles: `v in V2`; for odd `k`,
//!   `u in V_{k-1}` and `w in V_k`; for even `k`, `w in V_{k-1}` and
//!   `u in V_k`.
//!
//! Detection walks the layers bottom-up. In a chain, `D<V_i ∪ ... ∪ V_k>` is
//! strong for `i <= k-2` and the back arc `e_i` is one of its cut arcs, with
//! `V_i` an in-closed prefix of the strong components after deleting it.
//! When the tail of `e_{i-2}` is known, `V_i` is forced to be the set of
//! vertices reaching that tail. The search branches over cut arcs and, for
//! the two lowest layers, over the prefix length, and memoises failed
//! states. It is exact; an exhaustive ordered-partition search is kept as a
//! cross-check for very small digraphs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::config::Budgets;
use crate::digraph::{cut_arcs, strong_decomposition, ArcPath, Digraph};
use crate::error::{Error, Result};
use crate::flow::max_flow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TypeKind {
    A,
    B,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeRoles {
    pub u: usize,
    /// `None` leaves `w` unconstrained within its layer.
    pub w: Option<usize>,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeCertificate {
    pub kind: TypeKind,
    /// `V1, V2, ...`, each sorted ascending.
    pub parts: Vec<Vec<usize>>,
    /// Type A: the single `V2 -> V1` arc. Otherwise the arc
    /// `V_{i+2} -> V_i` for `i = 1..k-2`, in order.
    pub back_arcs: Vec<(usize, usize)>,
    pub roles: TypeRoles,
}

impl TypeCertificate {
    pub fn layers(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is an odd chain (`2a+3` layers, `a >= 1`).
    pub fn is_odd_chain(&self) -> bool {
        self.kind == TypeKind::Chain && self.parts.len() % 2 == 1
    }

    pub fn first_part_contains(&self, x: usize) -> bool {
        self.parts.first().is_some_and(|p| p.contains(&x))
    }
}

fn kind_for(k: usize) -> TypeKind {
    match k {
        2 => TypeKind::A,
        3 => TypeKind::B,
        _ => TypeKind::Chain,
    }
}

/// Reachability inside `D<set>` (given as a mask), from or to `start`.
fn reach_in(d: &Digraph, set: &[bool], start: usize, backwards: bool) -> Vec<bool> {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if set[y]
                && !seen[y]
                && (if backwards {
                    d.has_arc(y, x)
                } else {
                    d.has_arc(x, y)
                })
            {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Checks every clause of the definition for `cert` over `D<∪ parts>`,
/// reporting the first violated one. Parts must be disjoint, but need not
/// cover `V(D)`.
pub fn verify_type_certificate_within(d: &Digraph, cert: &TypeCertificate) -> Result<(), String> {
    let n = d.n();
    let k = cert.parts.len();
    let mut layer = vec![usize::MAX; n];
    for (i, p) in cert.parts.iter().enumerate() {
        if p.is_empty() {
            return Err(format!("part V{} is empty", i + 1));
        }
        for &x in p {
            if x >= n {
                return Err(format!("vertex {x} out of range"));
            }
            if layer[x] != usize::MAX {
                return Err(format!("vertex {x} lies in two parts"));
            }
            layer[x] = i;
        }
    }
    let expected = match cert.kind {
        TypeKind::A => k == 2,
        TypeKind::B => k == 3,
        TypeKind::Chain => k >= 4,
    };
    if !expected {
        return Err(format!("{:?} certificate with {k} parts", cert.kind));
    }
    let TypeRoles { u, w, v } = cert.roles;
    let at = |x: usize| if x < n { layer[x] } else { usize::MAX };
    let role_err =
        |name: &str, x: usize, want: usize| Err(format!("{name}={x} must lie in V{}", want + 1));
    match cert.kind {
        TypeKind::A => {
            if at(v) != 0 {
                return role_err("v", v, 0);
            }
            if at(u) != 1 {
                return role_err("u", u, 1);
            }
            if let Some(w) = w {
                if at(w) != 1 {
                    return role_err("w", w, 1);
                }
            }
        }
        _ => {
            let (ul, wl) = if k % 2 == 1 {
                (k - 2, k - 1)
            } else {
                (k - 1, k - 2)
            };
            if at(v) != 1 {
                return role_err("v", v, 1);
            }
            if at(u) != ul {
                return role_err("u", u, ul);
            }
            if let Some(w) = w {
                if at(w) != wl {
                    return role_err("w", w, wl);
                }
            }
        }
    }
    for &(a, b) in &cert.back_arcs {
        if !d.has_arc(a, b) {
            return Err(format!("listed back arc {a} -> {b} is not an arc"));
        }
    }
    if cert.kind == TypeKind::A {
        let crossing: Vec<(usize, usize)> = d
            .arcs()
            .into_iter()
            .filter(|&(a, b)| at(a) == 1 && at(b) == 0)
            .collect();
        if crossing.len() != 1 {
            return Err(format!(
                "{} arcs from V2 to V1, expected exactly one",
                crossing.len()
            ));
        }
        if cert.back_arcs != crossing {
            return Err("back arc list does not match the V2 -> V1 arc".into());
        }
        return Ok(());
    }
    if cert.back_arcs.len() != k - 2 {
        return Err(format!(
            "{} back arcs listed, expected {}",
            cert.back_arcs.len(),
            k - 2
        ));
    }
    for (i, &(a, b)) in cert.back_arcs.iter().enumerate() {
        if at(a) != i + 2 || at(b) != i {
            return Err(format!(
                "back arc {a} -> {b} must run from V{} to V{}",
                i + 3,
                i + 1
            ));
        }
    }
    for (a, b) in d.arcs() {
        let (la, lb) = (at(a), at(b));
        if la == usize::MAX || lb == usize::MAX || la <= lb {
            continue;
        }
        if la != lb + 2 || cert.back_arcs[lb] != (a, b) {
            return Err(format!(
                "arc {a} -> {b} goes from V{} back to V{}",
                la + 1,
                lb + 1
            ));
        }
    }
    for (i, &(a, b)) in cert.back_arcs.iter().enumerate() {
        let top: Vec<bool> = (0..n).map(|x| at(x) == i + 2).collect();
        let bottom: Vec<bool> = (0..n).map(|x| at(x) == i).collect();
        let to_a = reach_in(d, &top, a, true);
        if (0..n).any(|x| top[x] && !to_a[x]) {
            return Err(format!(
                "tail {a} is not in the terminal component of D<V{}>",
                i + 3
            ));
        }
        let from_b = reach_in(d, &bottom, b, false);
        if (0..n).any(|x| bottom[x] && !from_b[x]) {
            return Err(format!(
                "head {b} is not in the initial component of D<V{}>",
                i + 1
            ));
        }
    }
    Ok(())
}

/// [`verify_type_certificate_within`] plus the requirement that the parts
/// partition `V(D)`.
pub fn verify_type_certificate(d: &Digraph, cert: &TypeCertificate) -> Result<(), String> {
    let covered: usize = cert.parts.iter().map(Vec::len).sum();
    verify_type_certificate_within(d, cert)?;
    if covered != d.n() {
        return Err(format!("parts cover {covered} of {} vertices", d.n()));
    }
    Ok(())
}

/// What a detection call looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Query {
    pub u: usize,
    pub w: Option<usize>,
    pub v: usize,
    /// A vertex required to lie in `V1`.
    pub z: Option<usize>,
    pub type_a: bool,
    /// Smallest admissible chain length (`>= 3`).
    pub min_layers: usize,
    pub odd_only: bool,
}

impl Query {
    pub fn all(u: usize, w: usize, v: usize, z: Option<usize>) -> Self {
        Query {
            u,
            w: Some(w),
            v,
            z,
            type_a: true,
            min_layers: 3,
            odd_only: false,
        }
    }

    /// Odd chains with at least five layers, `w` free.
    pub fn odd_chain(u: usize, v: usize) -> Self {
        Query {
            u,
            w: None,
            v,
            z: None,
            type_a: false,
            min_layers: 5,
            odd_only: true,
        }
    }

    fn accepts_len(&self, k: usize) -> bool {
        if k == 2 {
            return self.type_a;
        }
        k >= self.min_layers && (!self.odd_only || k % 2 == 1)
    }

    fn roles(&self) -> TypeRoles {
        TypeRoles {
            u: self.u,
            w: self.w,
            v: self.v,
        }
    }
}

/// Builds the certificate implied by an ordered partition, or `None` when
/// the partition does not have the required shape.
pub(crate) fn certificate_from_layers(
    d: &Digraph,
    mut layers: Vec<Vec<usize>>,
    roles: TypeRoles,
) -> Option<TypeCertificate> {
    let n = d.n();
    let k = layers.len();
    if k < 2 {
        return None;
    }
    let mut layer = vec![usize::MAX; n];
    for (i, p) in layers.iter_mut().enumerate() {
        p.sort_unstable();
        for &x in p.iter() {
            layer[x] = i;
        }
    }
    let mut back = Vec::new();
    if k == 2 {
        back = d
            .arcs()
            .into_iter()
            .filter(|&(a, b)| layer[a] == 1 && layer[b] == 0)
            .collect();
    } else {
        for i in 0..k - 2 {
            let arcs: Vec<(usize, usize)> = layers[i + 2]
                .iter()
                .flat_map(|&a| layers[i].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| d.has_arc(a, b))
                .collect();
            if arcs.len() != 1 {
                return None;
            }
            back.push(arcs[0]);
        }
    }
    let cert = TypeCertificate {
        kind: kind_for(k),
        parts: layers,
        back_arcs: back,
        roles,
    };
    verify_type_certificate_within(d, &cert).ok().map(|_| cert)
}

fn z_ok(q: &Query, cert: &TypeCertificate) -> bool {
    q.z.is_none_or(|z| cert.first_part_contains(z))
}

/// Type A with `{u, w}` in `V2` and `v` (and `z`) in `V1`.
fn detect_type_a(d: &Digraph, q: &Query) -> Option<TypeCertificate> {
    let n = d.n();
    let mut sources = vec![q.u];
    if let Some(w) = q.w {
        if w != q.u {
            sources.push(w);
        }
    }
    let mut sinks = vec![q.v];
    if let Some(z) = q.z {
        if z != q.v {
            sinks.push(z);
        }
    }
    if sources.iter().any(|s| sinks.contains(s)) {
        return None;
    }
    let make = |v2: Vec<bool>| {
        let p2: Vec<usize> = (0..n).filter(|&x| v2[x]).collect();
        let p1: Vec<usize> = (0..n).filter(|&x| !v2[x]).collect();
        certificate_from_layers(d, vec![p1, p2], q.roles()).filter(|c| z_ok(q, c))
    };
    let flow = max_flow(d, &sources, &sinks, 2);
    match flow.value {
        1 => make(flow.source_side),
        0 => {
            // {u, w} cannot reach {v, z}; look for a set with a single
            // leaving arc.
            for (a, b) in d.arcs() {
                let mut start = sources.clone();
                start.push(a);
                let s = d.without_arc(a, b).reach_from(&start);
                if !s[b] && sinks.iter().all(|&t| !s[t]) {
                    return make(s);
                }
            }
            None
        }
        _ => None,
    }
}

type Key = (usize, Vec<u64>, usize, usize);

struct Peel<'a> {
    d: &'a Digraph,
    q: Query,
    failed: HashSet<Key>,
}

fn bits(n: usize, set: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &x in set {
        b[x / 64] |= 1 << (x % 64);
    }
    b
}

impl Peel<'_> {
    /// Layers `V_i..V_k` covering `r`, or `None`.
    fn go(
        &mut self,
        r: &[usize],
        i: usize,
        t2: Option<usize>,
        t1: Option<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        let phase = if i < 6 { i } else { 6 + i % 2 };
        let key = (
            phase,
            bits(self.d.n(), r),
            t2.unwrap_or(usize::MAX),
            t1.unwrap_or(usize::MAX),
        );
        if self.failed.contains(&key) {
            return None;
        }
        let found = self
            .final_split(r, i, t2, t1)
            .or_else(|| self.peel(r, i, t2, t1));
        if found.is_none() {
            self.failed.insert(key);
        }
        found
    }

    fn in_set(set: &[usize], x: Option<usize>) -> bool {
        x.is_some_and(|x| set.contains(&x))
    }

    /// The last two layers: `V_i` an in-closed prefix of `D<r>`, `V_{i+1}`
    /// the rest, no back arc between them.
    fn final_split(
        &self,
        r: &[usize],
        i: usize,
        t2: Option<usize>,
        t1: Option<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        let k = i + 1;
        if i < 2 || !self.q.accepts_len(k) {
            return None;
        }
        let q = self.q;
        let h = self.d.induced(r);
        let comps: Vec<Vec<usize>> = strong_decomposition(&h)
            .components
            .into_iter()
            .map(|c| c.into_iter().map(|l| r[l]).collect())
            .collect();
        let m = comps.len();
        if m < 2 || !comps[m - 1].contains(&t1?) {
            return None;
        }
        let comp_of = |x: usize| comps.iter().position(|c| c.contains(&x));
        let prefixes: Vec<usize> = match t2 {
            Some(t) => vec![comp_of(t)? + 1],
            None => (1..m).collect(),
        };
        for j in prefixes {
            if j >= m {
                continue;
            }
            let low: Vec<usize> = comps[..j].concat();
            let high: Vec<usize> = comps[j..].concat();
            if i == 2 && !low.contains(&q.v) {
                continue;
            }
            let (ulow, wlow) = (low.contains(&q.u), Self::in_set(&low, q.w));
            let ok = if k % 2 == 1 {
                ulow && (q.w.is_none() || Self::in_set(&high, q.w))
            } else {
                high.contains(&q.u) && (q.w.is_none() || wlow)
            };
            if ok {
                return Some(vec![low, high]);
            }
        }
        None
    }

    /// Peels `V_i` off through a back arc `e_i`, then recurses.
    fn peel(
        &mut self,
        r: &[usize],
        i: usize,
        t2: Option<usize>,
        t1: Option<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        let q = self.q;
        let h = self.d.induced(r);
        if r.len() < 3 || !h.is_strong() {
            return None;
        }
        let local = |x: usize| r.iter().position(|&y| y == x);
        for (la, lb) in cut_arcs(&h).ok()? {
            let (a, _b) = (r[la], r[lb]);
            let sd = strong_decomposition(&h.without_arc(la, lb));
            let comps: Vec<Vec<usize>> = sd
                .components
                .iter()
                .map(|c| c.iter().map(|&l| r[l]).collect())
                .collect();
            let l = comps.len();
            let prefixes: Vec<usize> = match t2 {
                Some(t) => vec![sd.comp_of[local(t)?] + 1],
                None => (1..l).collect(),
            };
            for j in prefixes {
                if j >= l {
                    continue;
                }
                let low: Vec<usize> = comps[..j].concat();
                if Self::in_set(&low, t1)
                    || low.contains(&q.u)
                    || Self::in_set(&low, q.w)
                    || (i == 2) != low.contains(&q.v)
                    || (i == 1 && q.z.is_some() && !Self::in_set(&low, q.z))
                    || (i >= 2 && Self::in_set(&low, q.z))
                {
                    continue;
                }
                let rest: Vec<usize> = comps[j..].concat();
                let mut rest = rest;
                rest.sort_unstable();
                if let Some(mut upper) = self.go(&rest, i + 1, t1, Some(a)) {
                    upper.insert(0, low);
                    return Some(upper);
                }
            }
        }
        None
    }
}

fn detect_chain(d: &Digraph, q: &Query) -> Option<TypeCertificate> {
    let n = d.n();
    if !d.is_strong() || n < 3 {
        return None;
    }
    let mut peel = Peel {
        d,
        q: *q,
        failed: HashSet::new(),
    };
    let all: Vec<usize> = (0..n).collect();
    let layers = peel.go(&all, 1, None, None)?;
    certificate_from_layers(d, layers, q.roles()).filter(|c| z_ok(q, c))
}

pub(crate) fn detect_with(d: &Digraph, q: &Query) -> Option<TypeCertificate> {
    let n = d.n();
    if [Some(q.u), q.w, Some(q.v), q.z]
        .iter()
        .flatten()
        .any(|&x| x >= n)
    {
        return None;
    }
    let found = (if q.type_a { detect_type_a(d, q) } else { None }).or_else(|| detect_chain(d, q));
    found.filter(|c| verify_type_certificate(d, c).is_ok())
}

/// Ordered-partition brute force over all layer assignments, for
/// cross-checking the detector. Exponential; intended for `n <= 7`.
pub(crate) fn exhaustive_search(d: &Digraph, q: &Query) -> Option<TypeCertificate> {
    let n = d.n();
    let mut label = vec![0usize; n];
    for k in 2..=n {
        if !q.accepts_len(k) {
            continue;
        }
        label.iter_mut().for_each(|x| *x = 0);
        loop {
            let mut counts = vec![0usize; k];
            for &l in &label {
                counts[l] += 1;
            }
            if counts.iter().all(|&c| c > 0) {
                let mut layers = vec![Vec::new(); k];
                for (x, &l) in label.iter().enumerate() {
                    layers[l].push(x);
                }
                if let Some(c) = certificate_from_layers(d, layers, q.roles()) {
                    if z_ok(q, &c) && verify_type_certificate(d, &c).is_ok() {
                        return Some(c);
                    }
                }
            }
            // Next assignment in base k.
            let mut p = 0;
            while p < n {
                label[p] += 1;
                if label[p] < k {
                    break;
                }
                label[p] = 0;
                p += 1;
            }
            if p == n {
                break;
            }
        }
    }
    None
}

/// Some layered structure for `(D, u, w, v)`, verified, or `None`.
pub fn detect_obstruction_type(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
) -> Option<TypeCertificate> {
    detect_obstruction_type_with(d, u, w, v, Budgets::from_env())
}

pub fn detect_obstruction_type_with(
    d: &Digraph,
    u: usize,
    w: usize,
    v: usize,
    budgets: Budgets,
) -> Option<TypeCertificate> {
    let q = Query::all(u, w, v, None);
    detect_with(d, &q).or_else(|| {
        if d.n() <= budgets.exhaustive_n {
            exhaustive_search(d, &q)
        } else {
            None
        }
    })
}

/// Why no arc-disjoint `(x1, y1)`- and `(x2, y2)`-paths exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum PathPairObstruction {
    /// `x1 = x2 = x`, `y1 = y2 = y`, and `{x}`, `{y}` are consecutive strong
    /// components: every `(x, y)`-path is the arc `xy`.
    ConsecutiveSingletons { x: usize, y: usize },
    /// All four vertices lie in one strong component, and the restriction
    /// to it has a layered structure for `(x_i, x_{3-i}, y_{3-i})` with
    /// `y_i`, the offending target, in `V1`.
    Typed {
        certificate: TypeCertificate,
        offending_target: usize,
    },
    /// No layered structure applies, yet every simple `(x1, y1)`-path cuts
    /// `x2` off from `y2`. Checked by re-enumerating those paths.
    Exhausted,
}

/// Node limit for re-enumerating first paths when checking
/// [`PathPairObstruction::Exhausted`].
pub const EXHAUSTED_CHECK_NODES: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathPairOutcome {
    Paths(ArcPath, ArcPath),
    Obstruction(PathPairObstruction),
}

/// Checks an obstruction against the instance from scratch.
pub fn verify_path_pair_obstruction(
    d: &Digraph,
    (x1, y1, x2, y2): (usize, usize, usize, usize),
    obs: &PathPairObstruction,
) -> Result<(), String> {
    let n = d.n();
    if [x1, y1, x2, y2].iter().any(|&x| x >= n) {
        return Err("vertex out of range".into());
    }
    match *obs {
        PathPairObstruction::Exhausted => {
            no_disjoint_second_path(d, (x1, y1, x2, y2), EXHAUSTED_CHECK_NODES)
        }
        PathPairObstruction::ConsecutiveSingletons { x, y } => {
            if (x1, y1) != (x, y) || (x2, y2) != (x, y) {
                return Err("endpoints do not match the singleton pair".into());
            }
            if !d.has_arc(x, y) {
                return Err(format!("{x} -> {y} is not an arc"));
            }
            // Singleton components: no other vertex is both reachable from
            // and reaching them. Consecutive: nothing sits between them.
            let from_x = d.reach_from(&[x]);
            let to_x = d.reach_to(&[x]);
            let from_y = d.reach_from(&[y]);
            let to_y = d.reach_to(&[y]);
            if (0..n).any(|a| a != x && from_x[a] && to_x[a]) {
                return Err(format!("{{{x}}} is not a strong component"));
            }
            if (0..n).any(|a| a != y && from_y[a] && to_y[a]) {
                return Err(format!("{{{y}}} is not a strong component"));
            }
            if (0..n).any(|a| a != x && a != y && from_x[a] && to_y[a]) {
                return Err("a component lies between the two singletons".into());
            }
            Ok(())
        }
        PathPairObstruction::Typed {
            ref certificate,
            offending_target,
        } => {
            verify_type_certificate_within(d, certificate)?;
            let TypeRoles { u, w, v } = certificate.roles;
            let w = w.ok_or("certificate leaves w unconstrained")?;
            let i1 = (u, w, v, offending_target) == (x1, x2, y2, y1);
            let i2 = (u, w, v, offending_target) == (x2, x1, y1, y2);
            if !i1 && !i2 {
                return Err("roles do not match the path endpoints".into());
            }
            if !certificate.first_part_contains(offending_target) {
                return Err(format!("offending target {offending_target} is not in V1"));
            }
            // The parts must be exactly the strong component of x1.
            let mut inside = vec![false; n];
            for p in &certificate.parts {
                for &x in p {
                    inside[x] = true;
                }
            }
            let from = d.reach_from(&[x1]);
            let to = d.reach_to(&[x1]);
            for a in 0..n {
                if inside[a] != (from[a] && to[a]) {
                    return Err(format!(
                        "parts differ from the strong component of {x1} at {a}"
                    ));
                }
            }
            Ok(())
        }
    }
}

/// Plain enumeration of simple `(x1, y1)`-paths, pruned once `x2` no
/// longer reaches `y2` through the unused arcs. Shares no code with
/// [`find_path_pair`].
fn no_disjoint_second_path(
    d: &Digraph,
    (x1, y1, x2, y2): (usize, usize, usize, usize),
    limit: u64,
) -> Result<(), String> {
    fn connected(d: &Digraph, used: &HashSet<(usize, usize)>, a: usize, b: usize) -> bool {
        let mut seen = vec![false; d.n()];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for y in d.out_neighbors(x) {
                if !seen[y] && !used.contains(&(x, y)) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
    struct Walk<'a> {
        d: &'a Digraph,
        ends: (usize, usize, usize, usize),
        used: HashSet<(usize, usize)>,
        on: Vec<bool>,
        nodes: u64,
        limit: u64,
    }
    impl Walk<'_> {
        // Err when a pair exists or the limit is hit.
        fn go(&mut self, x: usize) -> Result<(), String> {
            let (_, y1, x2, y2) = self.ends;
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(format!("re-enumeration exceeds {} nodes", self.limit));
            }
            if !connected(self.d, &self.used, x2, y2) {
                return Ok(());
            }
            if x == y1 {
                return Err("arc-disjoint paths exist".into());
            }
            let next: Vec<usize> = self.d.out_neighbors(x).filter(|&y| !self.on[y]).collect();
            for y in next {
                self.on[y] = true;
                self.used.insert((x, y));
                let r = self.go(y);
                self.used.remove(&(x, y));
                self.on[y] = false;
                r?;
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        d,
        ends: (x1, y1, x2, y2),
        used: HashSet::new(),
        on: vec![false; d.n()],
        nodes: 0,
        limit,
    };
    walk.on[x1] = true;
    walk.go(x1)
}

fn map_certificate(c: TypeCertificate, map: &[usize]) -> TypeCertificate {
    TypeCertificate {
        kind: c.kind,
        parts: c
            .parts
            .into_iter()
            .map(|p| {
                let mut q: Vec<usize> = p.into_iter().map(|x| map[x]).collect();
                q.sort_unstable();
                q
            })
            .collect(),
        back_arcs: c
            .back_arcs
            .into_iter()
            .map(|(a, b)| (map[a], map[b]))
            .collect(),
        roles: TypeRoles {
            u: map[c.roles.u],
            w: c.roles.w.map(|w| map[w]),
            v: map[c.roles.v],
        },
    }
}

/// The obstruction for the four endpoints if one exists.
pub fn detect_path_pair_obstruction(
    d: &Digraph,
    (x1, y1, x2, y2): (usize, usize, usize, usize),
    budgets: Budgets,
) -> Option<PathPairObstruction> {
    if x1 == y1 || x2 == y2 {
        return None;
    }
    let sd = strong_decomposition(d);
    let c = &sd.comp_of;
    if x1 == x2
        && y1 == y2
        && c[y1] == c[x1] + 1
        && sd.components[c[x1]].len() == 1
        && sd.components[c[y1]].len() == 1
    {
        return Some(PathPairObstruction::ConsecutiveSingletons { x: x1, y: y1 });
    }
    if !(c[x1] == c[y1] && c[x1] == c[x2] && c[x1] == c[y2]) {
        return None;
    }
    let comp = &sd.components[c[x1]];
    let sub = d.induced(comp);
    let local = |x: usize| {
        comp.iter()
            .position(|&y| y == x)
            .expect("vertex in component")
    };
    for (u, w, v, z) in [(x1, x2, y2, y1), (x2, x1, y1, y2)] {
        let q = Query::all(local(u), local(w), local(v), Some(local(z)));
        let found = detect_with(&sub, &q).or_else(|| {
            if sub.n() <= budgets.exhaustive_n {
                exhaustive_search(&sub, &q)
            } else {
                None
            }
        });
        if let Some(cert) = found {
            return Some(PathPairObstruction::Typed {
                certificate: map_certificate(cert, comp),
                offending_target: z,
            });
        }
    }
    None
}

/// Depth-first search for the first path, consuming arcs, with the second
/// pair required to stay connected. Shortest continuations are tried
/// first.
struct PairSearch<'a> {
    d: &'a Digraph,
    target: usize,
    x2: usize,
    y2: usize,
    dist: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl PairSearch<'_> {
    fn run(
        &mut self,
        residual: &mut Digraph,
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
    ) -> Result<Option<ArcPath>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        if !residual.reach_from(&[self.x2])[self.y2] {
            return Ok(None);
        }
        let x = *path.last().expect("non-empty path");
        if x == self.target {
            return Ok(residual.shortest_path(self.x2, self.y2));
        }
        let mut next: Vec<usize> = self.d.out_neighbors(x).filter(|&y| !on[y]).collect();
        next.sort_by_key(|&y| (self.dist[y], y));
        for y in next {
            if self.dist[y] == usize::MAX {
                continue;
            }
            residual.remove_arc(x, y);
            path.push(y);
            on[y] = true;
            let r = self.run(residual, path, on)?;
            if r.is_some() {
                // Leave the first path in `path`.
                return Ok(r);
            }
            on[y] = false;
            path.pop();
            residual.add_arc(x, y).expect("restore arc");
        }
        Ok(None)
    }
}

/// Arc-disjoint `(x1, y1)`- and `(x2, y2)`-paths, or a verified obstruction.
pub fn arc_disjoint_path_pair(
    d: &Digraph,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
) -> Result<PathPairOutcome> {
    arc_disjoint_path_pair_with(d, x1, y1, x2, y2, Budgets::from_env())
}

pub fn arc_disjoint_path_pair_with(
    d: &Digraph,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
    budgets: Budgets,
) -> Result<PathPairOutcome> {
    let n = d.n();
    for x in [x1, y1, x2, y2] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    for (a, b) in [(x1, y1), (x2, y2)] {
        if !d.reach_from(&[a])[b] {
            return Err(Error::NoBasePath { from: a, to: b });
        }
    }
    let ends = (x1, y1, x2, y2);
    if let Some(obs) = detect_path_pair_obstruction(d, ends, budgets) {
        verify_path_pair_obstruction(d, ends, &obs).map_err(Error::InternalInconsistency)?;
        return Ok(PathPairOutcome::Obstruction(obs));
    }
    let Some((p1, p2)) = find_path_pair(d, ends, budgets.search_nodes)? else {
        let obs = PathPairObstruction::Exhausted;
        verify_path_pair_obstruction(d, ends, &obs).map_err(Error::InternalInconsistency)?;
        return Ok(PathPairOutcome::Obstruction(obs));
    };
    verify_path_pair(d, ends, &p1, &p2).map_err(Error::InternalInconsistency)?;
    Ok(PathPairOutcome::Paths(p1, p2))
}

/// Searches for the paths without consulting the structure theory.
pub(crate) fn find_path_pair(
    d: &Digraph,
    (x1, y1, x2, y2): (usize, usize, usize, usize),
    budget: u64,
) -> Result<Option<(ArcPath, ArcPath)>> {
    if x1 == y1 {
        return Ok(d.shortest_path(x2, y2).map(|p| (ArcPath::trivial(x1), p)));
    }
    if x2 == y2 {
        return Ok(d.shortest_path(x1, y1).map(|p| (p, ArcPath::trivial(x2))));
    }
    // Cheap first attempt: a shortest first path.
    if let Some(p1) = d.shortest_path(x1, y1) {
        let arcs: Vec<(usize, usize)> = p1.arcs().collect();
        if let Some(p2) = d.without_arcs(&arcs).shortest_path(x2, y2) {
            return Ok(Some((p1, p2)));
        }
    }
    let dist = d.distances(y1, true);
    let mut s = PairSearch {
        d,
        target: y1,
        x2,
        y2,
        dist,
        nodes: 0,
        budget,
    };
    let mut residual = d.clone();
    let mut path = vec![x1];
    let mut on = vec![false; d.n()];
    on[x1] = true;
    match s.run(&mut residual, &mut path, &mut on)? {
        Some(p2) => Ok(Some((ArcPath::new(path), p2))),
        None => Ok(None),
    }
}

/// Both paths valid, with the right endpoints, and sharing no arc.
pub fn verify_path_pair(
    d: &Digraph,
    (x1, y1, x2, y2): (usize, usize, usize, usize),
    p1: &ArcPath,
    p2: &ArcPath,
) -> Result<(), String> {
    p1.verify(d)?;
    p2.verify(d)?;
    if (p1.start(), p1.end()) != (x1, y1) || (p2.start(), p2.end()) != (x2, y2) {
        return Err("path endpoints do not match".into());
    }
    let a: HashSet<(usize, usize)> = p1.arcs().collect();
    if let Some(e) = p2.arcs().find(|e| a.contains(e)) {
        return Err(format!("arc {} -> {} used by both paths", e.0, e.1));
    }
    Ok(())
}
