//! Certificates of non-existence and their independent checker.
//!
//! The checker re-derives every claim from the certificate and the digraph
//! with its own reachability code; it never calls the decision procedure.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::fixtures;
use crate::iso::is_isomorphism;
use crate::structure::{
    verify_path_pair_obstruction, verify_type_certificate, PathPairObstruction, TypeCertificate,
    TypeKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootSide {
    UNotInitial,
    VNotTerminal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoPairCertificate {
    /// `iso[x]` is the catalog vertex playing the role of `x`.
    SmallException {
        catalog_id: char,
        iso: Vec<usize>,
    },
    /// Strong components of `D` in acyclic order.
    RootMisplaced {
        components: Vec<Vec<usize>>,
        which: RootSide,
    },
    /// Strong components of `D - arc` in acyclic order.
    CutArcObstruction {
        arc: (usize, usize),
        components: Vec<Vec<usize>>,
    },
    ChainObstruction {
        certificate: TypeCertificate,
    },
    /// No arc-disjoint `(u, z)`- and `(w, v)`-paths, which any good pair
    /// would contain.
    MissingPathPair {
        z: usize,
        w: usize,
        obstruction: PathPairObstruction,
    },
}

impl NoPairCertificate {
    /// Short tag for text output.
    pub fn label(&self) -> String {
        match self {
            NoPairCertificate::SmallException { catalog_id, .. } => {
                format!("SmallException({catalog_id})")
            }
            NoPairCertificate::RootMisplaced { which, .. } => format!("RootMisplaced({which:?})"),
            NoPairCertificate::CutArcObstruction { arc, .. } => {
                format!("CutArcObstruction({} -> {})", arc.0, arc.1)
            }
            NoPairCertificate::ChainObstruction { certificate } => {
                format!("ChainObstruction({} layers)", certificate.layers())
            }
            NoPairCertificate::MissingPathPair { z, w, .. } => {
                format!("MissingPathPair(z = {z}, w = {w})")
            }
        }
    }
}

pub(crate) fn catalog_id(name: &str) -> Option<char> {
    name.strip_prefix("FIG_")
        .and_then(|s| s.chars().next())
        .map(|c| c.to_ascii_lowercase())
}

fn catalog_entry(id: char) -> Option<fixtures::Fixture> {
    fixtures::catalog()
        .into_iter()
        .find(|f| catalog_id(f.name) == Some(id))
}

/// DFS reachability restricted to `mask`, skipping the arc `skip`.
fn reach(
    d: &Digraph,
    mask: &[bool],
    start: usize,
    backwards: bool,
    skip: Option<(usize, usize)>,
) -> Vec<bool> {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            let e = if backwards { (y, x) } else { (x, y) };
            if mask[y] && !seen[y] && Some(e) != skip && d.has_arc(e.0, e.1) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Checks that `components` are the strong components of `D - skip` in an
/// acyclic order.
fn check_decomposition(
    d: &Digraph,
    components: &[Vec<usize>],
    skip: Option<(usize, usize)>,
) -> Result<(), String> {
    let n = d.n();
    let mut comp = vec![usize::MAX; n];
    for (i, c) in components.iter().enumerate() {
        if c.is_empty() {
            return Err(format!("component {i} is empty"));
        }
        for &x in c {
            if x >= n || comp[x] != usize::MAX {
                return Err(format!("vertex {x} repeated or out of range"));
            }
            comp[x] = i;
        }
    }
    if let Some(x) = comp.iter().position(|&c| c == usize::MAX) {
        return Err(format!("vertex {x} in no component"));
    }
    for (i, c) in components.iter().enumerate() {
        let mask: Vec<bool> = (0..n).map(|x| comp[x] == i).collect();
        let fwd = reach(d, &mask, c[0], false, skip);
        let bwd = reach(d, &mask, c[0], true, skip);
        if c.iter().any(|&x| !fwd[x] || !bwd[x]) {
            return Err(format!("component {i} is not strongly connected"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && d.has_arc(a, b) && Some((a, b)) != skip && comp[a] > comp[b] {
                return Err(format!("arc {a} -> {b} runs backwards in the ordering"));
            }
        }
    }
    Ok(())
}

fn is_strong(d: &Digraph) -> bool {
    let n = d.n();
    if n == 0 {
        return true;
    }
    let all = vec![true; n];
    reach(d, &all, 0, false, None).iter().all(|&r| r)
        && reach(d, &all, 0, true, None).iter().all(|&r| r)
}

/// Independent check of a certificate for `(D, u, v)`.
pub fn verify_no_pair_certificate(
    d: &Digraph,
    u: usize,
    v: usize,
    cert: &NoPairCertificate,
) -> Result<(), String> {
    let n = d.n();
    if u >= n || v >= n {
        return Err("root out of range".into());
    }
    match cert {
        NoPairCertificate::SmallException { catalog_id, iso } => {
            let f = catalog_entry(*catalog_id)
                .ok_or_else(|| format!("unknown catalog entry `{catalog_id}`"))?;
            if f.digraph.n() != n || iso.len() != n {
                return Err("order differs from the catalog entry".into());
            }
            if !is_isomorphism(d, &f.digraph, iso) {
                return Err("map is not an isomorphism".into());
            }
            if Some(iso[u]) != f.roles.u || Some(iso[v]) != f.roles.v {
                return Err("roots are not mapped to the catalog roots".into());
            }
            Ok(())
        }
        NoPairCertificate::RootMisplaced { components, which } => {
            check_decomposition(d, components, None)?;
            if components.len() < 2 {
                return Err("digraph is strong".into());
            }
            match which {
                RootSide::UNotInitial if components[0].contains(&u) => {
                    Err("u is in the initial component".into())
                }
                RootSide::VNotTerminal if components[components.len() - 1].contains(&v) => {
                    Err("v is in the terminal component".into())
                }
                _ => Ok(()),
            }
        }
        NoPairCertificate::CutArcObstruction { arc, components } => {
            let (a, b) = *arc;
            if a >= n || b >= n || !d.has_arc(a, b) {
                return Err("not an arc".into());
            }
            if !is_strong(d) {
                return Err("digraph is not strong".into());
            }
            check_decomposition(d, components, Some(*arc))?;
            if components[0].contains(&u) {
                return Err("u is in the initial component".into());
            }
            if components[components.len() - 1].contains(&v) {
                return Err("v is in the terminal component".into());
            }
            Ok(())
        }
        NoPairCertificate::ChainObstruction { certificate } => {
            if !is_strong(d) {
                return Err("digraph is not strong".into());
            }
            let k = certificate.layers();
            if certificate.kind != TypeKind::Chain || k < 5 || k % 2 == 0 {
                return Err("not an odd chain of at least five layers".into());
            }
            if certificate.roles.u != u || certificate.roles.v != v {
                return Err("roles differ from the roots".into());
            }
            if !certificate.parts[1].contains(&v) || !certificate.parts[k - 2].contains(&u) {
                return Err("roots are not in V2 and V(k-1)".into());
            }
            verify_type_certificate(d, certificate)
        }
        NoPairCertificate::MissingPathPair { z, w, obstruction } => {
            if *z >= n || *w >= n {
                return Err("z or w out of range".into());
            }
            verify_path_pair_obstruction(d, (u, *z, *w, v), obstruction)
        }
    }
}
