//! Good pairs whose two branchings share the root.

use serde::{Deserialize, Serialize};

use crate::config::Budgets;
use crate::digraph::{strong_decomposition, Digraph};
use crate::error::{Error, Result};

use super::search::search_good_pair;
use super::{verify_good_pair, GoodPair};

/// `A`, `B`, `C` partition `V - u` by adjacency with `u`: out-only, in-only
/// and both. `arc` is the single arc leaving the terminal component of
/// `D<A>`, which is also the single arc entering the initial component of
/// `D<B>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SameRootStructure {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub arc: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SameRootOutcome {
    Pair(GoodPair),
    Structure(SameRootStructure),
}

fn partition(d: &Digraph, u: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for x in (0..d.n()).filter(|&x| x != u) {
        match (d.has_arc(u, x), d.has_arc(x, u)) {
            (true, false) => a.push(x),
            (false, true) => b.push(x),
            (true, true) => c.push(x),
            (false, false) => {}
        }
    }
    (a, b, c)
}

/// Terminal (`last`) or initial component of `D<set>`, in global labels.
fn end_component(d: &Digraph, set: &[usize], last: bool) -> Vec<usize> {
    let sd = strong_decomposition(&d.induced(set));
    let comp = if last { sd.terminal() } else { sd.initial() };
    let mut g: Vec<usize> = comp.iter().map(|&i| set[i]).collect();
    g.sort_unstable();
    g
}

fn crossing(d: &Digraph, set: &[usize], leaving: bool) -> Vec<(usize, usize)> {
    let n = d.n();
    let mut inside = vec![false; n];
    for &x in set {
        inside[x] = true;
    }
    d.arcs()
        .into_iter()
        .filter(|&(p, q)| {
            if leaving {
                inside[p] && !inside[q]
            } else {
                !inside[p] && inside[q]
            }
        })
        .collect()
}

/// The obstruction to a good `(u, u)`-pair, when present.
pub fn find_same_root_structure(d: &Digraph, u: usize) -> Option<SameRootStructure> {
    let (a, b, c) = partition(d, u);
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let out = crossing(d, &end_component(d, &a, true), true);
    let inn = crossing(d, &end_component(d, &b, false), false);
    (out.len() == 1 && inn == out).then(|| SameRootStructure {
        a,
        b,
        c,
        arc: out[0],
    })
}

/// Recomputes every property of `s` for `(D, u)`.
pub fn verify_same_root_structure(
    d: &Digraph,
    u: usize,
    s: &SameRootStructure,
) -> Result<(), String> {
    if u >= d.n() {
        return Err("root out of range".into());
    }
    if !d.is_strong() {
        return Err("digraph is not strong".into());
    }
    let (a, b, c) = partition(d, u);
    if (a.as_slice(), b.as_slice(), c.as_slice())
        != (s.a.as_slice(), s.b.as_slice(), s.c.as_slice())
    {
        return Err("A, B, C do not match the neighbourhoods of u".into());
    }
    if a.is_empty() || b.is_empty() {
        return Err("A and B must be nonempty".into());
    }
    let out = crossing(d, &end_component(d, &a, true), true);
    if out != [s.arc] {
        return Err(format!(
            "arcs leaving the terminal component of D<A>: {out:?}"
        ));
    }
    let inn = crossing(d, &end_component(d, &b, false), false);
    if inn != [s.arc] {
        return Err(format!(
            "arcs entering the initial component of D<B>: {inn:?}"
        ));
    }
    Ok(())
}

/// A good `(u, u)`-pair of a strong semicomplete digraph, or the structure
/// ruling it out.
pub fn same_root_pair(d: &Digraph, u: usize) -> Result<SameRootOutcome> {
    same_root_pair_with(d, u, Budgets::from_env())
}

pub fn same_root_pair_with(d: &Digraph, u: usize, budgets: Budgets) -> Result<SameRootOutcome> {
    let n = d.n();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if !d.is_strong() {
        return Err(Error::NotStrong);
    }
    if let Some(s) = find_same_root_structure(d, u) {
        verify_same_root_structure(d, u, &s).map_err(Error::InternalInconsistency)?;
        return Ok(SameRootOutcome::Structure(s));
    }
    match search_good_pair(d, u, u, budgets.search_nodes)? {
        Some(p) => {
            verify_good_pair(d, u, u, &p).map_err(Error::InternalInconsistency)?;
            Ok(SameRootOutcome::Pair(p))
        }
        None => Err(Error::InternalInconsistency(format!(
            "no same-root structure at {u}, yet no good pair"
        ))),
    }
}
