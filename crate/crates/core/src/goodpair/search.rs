//! Budgeted backtracking for a good pair, used where no proof-following
//! construction applies.
//!
//! The out-branching is fixed one parent at a time. After every choice the
//! residual digraph must still let every vertex reach `v`, which is exactly
//! the condition for an in-branching to exist in it, so a complete parent
//! assignment finishes with a BFS in-tree of the residual. The search is
//! complete: it fails only when no pair exists or the node budget runs out.

use crate::branchings::{Tree, TreeKind};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

use super::GoodPair;

struct Search<'a> {
    d: &'a Digraph,
    u: usize,
    v: usize,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    residual: Digraph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn ancestors_avoid(&self, child: usize, mut p: usize) -> bool {
        loop {
            if p == child {
                return false;
            }
            match self.parent[p] {
                Some(q) => p = q,
                None => return true,
            }
        }
    }

    fn rooted(&self, mut p: usize) -> bool {
        while let Some(q) = self.parent[p] {
            p = q;
        }
        p == self.u
    }

    fn all_reach_v(&self) -> bool {
        self.residual.reach_to(&[self.v]).iter().all(|&r| r)
    }

    fn go(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let x = self.order[i];
        let n = self.d.n();
        // Arcs of a BFS in-tree of the residual can only be taken at the
        // price of a reachability check; all others are free.
        let hop = self.residual.bfs_in_tree(self.v);
        let mut cands: Vec<(bool, bool, usize)> = (0..n)
            .filter(|&p| p != x && self.d.has_arc(p, x) && self.ancestors_avoid(x, p))
            .map(|p| (!self.rooted(p), hop[p] == Some(x), p))
            .collect();
        cands.sort_unstable();
        for (_, in_hop, p) in cands {
            self.parent[x] = Some(p);
            self.residual.remove_arc(p, x);
            if (!in_hop || self.all_reach_v()) && self.go(i + 1)? {
                return Ok(true);
            }
            self.residual.add_arc(p, x).expect("restore arc");
            self.parent[x] = None;
        }
        Ok(false)
    }
}

/// A good `(u, v)`-pair if one exists, within `budget` search nodes.
pub(crate) fn search_good_pair(
    d: &Digraph,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<Option<GoodPair>> {
    let n = d.n();
    if !d.reach_from(&[u]).iter().all(|&r| r) || !d.reach_to(&[v]).iter().all(|&r| r) {
        return Ok(None);
    }
    // Vertices in BFS order from u, so that early parents are already rooted.
    let dist = d.distances(u, false);
    let mut order: Vec<usize> = (0..n).filter(|&x| x != u).collect();
    order.sort_by_key(|&x| (dist[x], x));
    let mut s = Search {
        d,
        u,
        v,
        order,
        parent: vec![None; n],
        residual: d.clone(),
        nodes: 0,
        budget,
    };
    if !s.go(0)? {
        return Ok(None);
    }
    let out = Tree {
        kind: TreeKind::Out,
        root: u,
        parent: s.parent,
        covered: vec![true; n],
    };
    let hop = s.residual.bfs_in_tree(v);
    let mut inb = Tree::trivial(n, TreeKind::In, v);
    for x in (0..n).filter(|&x| x != v) {
        inb.parent[x] = hop[x];
        inb.covered[x] = true;
    }
    Ok(Some(GoodPair {
        out_branching: out,
        in_branching: inb,
    }))
}
