//! Extending an arc-disjoint out-tree and in-tree across a vertex split.
//!
//! `T+` covers `X`, `T-` covers `Y`, and the arcs between `X` and `Y` are
//! constrained by one of three modes. The augmentations tried are the
//! explicit ones from the extension lemmas (each instantiated over all
//! admissible vertex choices, and also on the reversed digraph where the
//! mode is symmetric). Every candidate is checked before it is returned.
//! When none works the configuration is matched against the small shapes
//! the lemmas allow for non-extendable pairs.

use serde::{Deserialize, Serialize};

use crate::branchings::{Tree, TreeKind};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ExtensionMode {
    /// `X` dominates `Y` and no arc between them is used by either tree.
    NoArc,
    /// The arc between `a in Y` and `b in X` is used by `T-`; every other
    /// arc between the sides goes from `X` to `Y`, unused.
    InTreeArc { a: usize, b: usize },
    /// `a -> b` with `a in Y`, `b in X` is the only arc from `Y` to `X`, and
    /// neither tree covers a vertex of the other side.
    BackArc { a: usize, b: usize },
}

impl ExtensionMode {
    fn reversed(self) -> Self {
        match self {
            ExtensionMode::NoArc => ExtensionMode::NoArc,
            ExtensionMode::BackArc { a, b } => ExtensionMode::BackArc { a: b, b: a },
            m @ ExtensionMode::InTreeArc { .. } => m,
        }
    }
}

/// Shapes a non-extendable configuration can have. `X'` is the part of `X`
/// covered by `T-`, `Y'` the part of `Y` covered by `T+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionObstruction {
    /// `X' = Y' = ∅`, `|X ∪ Y| <= 3`, and `D<X>` (`D<Y>`) is one vertex or
    /// one arc used by `T+` (`T-`).
    NoArcSmall,
    /// `X = X' = {b}`, `a` not covered by `T+`, and every in-arc of `a`
    /// inside `X ∪ Y` is used by `T-`.
    InTreeArcSaturated,
    /// `X' = {b}`, `|(X - b) ∪ Y| <= 3` with the small-side shapes above,
    /// and every arc of `D<X>` outside `T+` leaves `b`.
    InTreeArcSmall,
    /// `X = {b, x}`, `Y = {a, y}`, `A(D<X>) = {bx}`, `A(D<Y>) = {ya}` and
    /// one of those arcs is used by its tree.
    BackArcSquare,
    /// `Y = {a}`, and either `T+` uses every out-arc of `b` in `D<X>` or
    /// every arc of `D<X>` outside `T+` leaves `b`.
    BackArcSingleY,
    /// `X = {b}`, and either `T-` uses every in-arc of `a` in `D<Y>` or
    /// every arc of `D<Y>` outside `T-` enters `a`.
    BackArcSingleX,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionOutcome {
    /// Arc-disjoint out- and in-trees, each covering `X ∪ Y`.
    Extended(Tree, Tree),
    Obstructed(ExtensionObstruction),
    /// No augmentation applied and no obstruction shape matched.
    Unresolved(String),
}

struct Inst<'a> {
    d: &'a Digraph,
    out: &'a Tree,
    inn: &'a Tree,
    xs: &'a [usize],
    ys: &'a [usize],
}

fn minus(set: &[usize], drop: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|x| !drop.contains(x)).collect()
}

fn arcs_within(d: &Digraph, set: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &p in set {
        for &q in set {
            if p != q && d.has_arc(p, q) {
                out.push((p, q));
            }
        }
    }
    out
}

fn has_tree_arc(t: &Tree, (a, b): (usize, usize)) -> bool {
    match t.kind {
        TreeKind::Out => t.parent[b] == Some(a),
        TreeKind::In => t.parent[a] == Some(b),
    }
}

/// Adds `arcs` to `t` in whatever order makes each attachable; `None` if
/// some arc would give a covered vertex a second parent or never connects.
fn grow(t: &Tree, arcs: &[(usize, usize)]) -> Option<Tree> {
    let mut t = t.clone();
    let mut pending = arcs.to_vec();
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|&(a, b)| {
            let (child, par) = match t.kind {
                TreeKind::Out => (b, a),
                TreeKind::In => (a, b),
            };
            if t.covered[par] && !t.covered[child] {
                t.attach(child, par);
                false
            } else {
                true
            }
        });
        if pending.len() == before {
            return None;
        }
    }
    Some(t)
}

impl Inst<'_> {
    fn x_prime(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter()
            .copied()
            .filter(|&x| self.inn.covered[x])
            .collect()
    }

    fn y_prime(&self, ys: &[usize]) -> Vec<usize> {
        ys.iter()
            .copied()
            .filter(|&y| self.out.covered[y])
            .collect()
    }

    fn accept(&self, o: &Tree, i: &Tree) -> bool {
        if o.verify(self.d).is_err() || i.verify(self.d).is_err() {
            return false;
        }
        if o.root != self.out.root || i.root != self.inn.root {
            return false;
        }
        if self
            .xs
            .iter()
            .chain(self.ys)
            .any(|&z| !o.covered[z] || !i.covered[z])
        {
            return false;
        }
        let oa = o.arcs();
        i.arcs().iter().all(|e| oa.binary_search(e).is_err())
    }

    fn attempt(
        &self,
        out_extra: &[(usize, usize)],
        in_extra: &[(usize, usize)],
    ) -> Option<(Tree, Tree)> {
        self.attempt_from(self.out, out_extra, in_extra)
    }

    fn attempt_from(
        &self,
        base: &Tree,
        out_extra: &[(usize, usize)],
        in_extra: &[(usize, usize)],
    ) -> Option<(Tree, Tree)> {
        if out_extra
            .iter()
            .chain(in_extra)
            .any(|&(a, b)| !self.d.has_arc(a, b))
        {
            return None;
        }
        let o = grow(base, out_extra)?;
        let i = grow(self.inn, in_extra)?;
        self.accept(&o, &i).then_some((o, i))
    }

    /// Augmentations when `xs` dominates `ys` with no arc between them used.
    fn no_arc(&self, xs: &[usize], ys: &[usize]) -> Option<(Tree, Tree)> {
        let xp = self.x_prime(xs);
        let yp = self.y_prime(ys);
        let x_rest = minus(xs, &xp);
        let y_rest = minus(ys, &yp);
        for &x in &xp {
            for &y in ys {
                let o: Vec<_> = y_rest.iter().map(|&r| (x, r)).collect();
                let i: Vec<_> = x_rest.iter().map(|&r| (r, y)).collect();
                if let Some(p) = self.attempt(&o, &i) {
                    return Some(p);
                }
            }
        }
        for (p, q) in arcs_within(self.d, xs) {
            if xp.contains(&p) || has_tree_arc(self.out, (p, q)) {
                continue;
            }
            for &y in ys {
                let o: Vec<_> = y_rest.iter().map(|&r| (p, r)).collect();
                let mut i = vec![(p, q)];
                i.extend(x_rest.iter().filter(|&&r| r != p).map(|&r| (r, y)));
                if let Some(pr) = self.attempt(&o, &i) {
                    return Some(pr);
                }
            }
        }
        if xs.len() == 2 && ys.len() == 2 && xp.is_empty() && yp.is_empty() {
            for (y1, y2) in [(ys[0], ys[1]), (ys[1], ys[0])] {
                let o = [(xs[0], y1), (xs[1], y2)];
                let i = [(xs[0], y2), (xs[1], y1)];
                if let Some(p) = self.attempt(&o, &i) {
                    return Some(p);
                }
            }
        }
        None
    }

    fn in_tree_arc(&self, a: usize, b: usize) -> Option<(Tree, Tree)> {
        let (xs, ys) = (self.xs, self.ys);
        let xp = self.x_prime(xs);
        let yp = self.y_prime(ys);
        let x_rest = minus(xs, &xp);
        let y_rest = minus(ys, &yp);
        for &x in xp.iter().filter(|&&x| x != b) {
            let o: Vec<_> = y_rest.iter().map(|&r| (x, r)).collect();
            let i: Vec<_> = x_rest.iter().map(|&r| (r, a)).collect();
            if let Some(p) = self.attempt(&o, &i) {
                return Some(p);
            }
        }
        let o: Vec<_> = y_rest.iter().map(|&r| (b, r)).collect();
        if let Some(p) = self.attempt(&o, &[]) {
            return Some(p);
        }
        let both: Vec<usize> = xs.iter().chain(ys).copied().collect();
        for &ai in &both {
            if ai == a || !self.d.has_arc(ai, a) || has_tree_arc(self.inn, (ai, a)) {
                continue;
            }
            let mut o = vec![(ai, a)];
            o.extend(y_rest.iter().filter(|&&r| r != a).map(|&r| (b, r)));
            if let Some(p) = self.attempt(&o, &[]) {
                return Some(p);
            }
        }
        let xb = minus(xs, &[b]);
        if !xb.is_empty() {
            if let Some(p) = self.no_arc(&xb, ys) {
                return Some(p);
            }
        }
        for (w, z) in arcs_within(self.d, xs) {
            if w == b || has_tree_arc(self.out, (w, z)) {
                continue;
            }
            let o: Vec<_> = y_rest.iter().map(|&r| (w, r)).collect();
            let mut i = vec![(w, z)];
            i.extend(xs.iter().filter(|&&r| r != b && r != w).map(|&r| (r, a)));
            if let Some(p) = self.attempt(&o, &i) {
                return Some(p);
            }
        }
        None
    }

    fn back_arc(&self, a: usize, b: usize) -> Option<(Tree, Tree)> {
        let (xs, ys) = (self.xs, self.ys);
        let xb = minus(xs, &[b]);
        let ya = minus(ys, &[a]);
        for &x1 in &xb {
            for &x2 in xb.iter().filter(|&&x2| x2 != x1) {
                for &y in &ya {
                    let mut o = vec![(x1, y), (x2, a)];
                    o.extend(ya.iter().filter(|&&r| r != y).map(|&r| (b, r)));
                    let mut i = vec![(x1, a)];
                    i.extend(xs.iter().filter(|&&r| r != x1).map(|&r| (r, y)));
                    if let Some(p) = self.attempt(&o, &i) {
                        return Some(p);
                    }
                }
            }
        }
        let inner = arcs_within(self.d, xs);
        for &y in &ya {
            for &(w, z) in inner.iter().filter(|&&(w, _)| w != b) {
                if has_tree_arc(self.out, (w, z)) {
                    continue;
                }
                let o: Vec<_> = ys.iter().map(|&r| (w, r)).collect();
                let mut i = vec![(w, z)];
                i.extend(xs.iter().filter(|&&r| r != w).map(|&r| (r, y)));
                if let Some(p) = self.attempt(&o, &i) {
                    return Some(p);
                }
            }
        }
        if xs.len() == 2 && ys.len() == 2 {
            let (x, y) = (xb[0], ya[0]);
            if self.out.parent[b] == Some(x) {
                // The footnoted case: `b` is re-attached through `a`.
                let mut base = self.out.clone();
                base.parent[b] = None;
                base.covered[b] = false;
                if let Some(p) =
                    self.attempt_from(&base, &[(x, a), (a, b), (x, y)], &[(x, b), (b, y)])
                {
                    return Some(p);
                }
            }
            if let Some(p) = self.attempt(&[(b, y), (y, a)], &[(b, x), (x, a)]) {
                return Some(p);
            }
        }
        if ys.len() == 1 {
            for &(bb, bo) in inner.iter().filter(|&&(t, _)| t == b) {
                if has_tree_arc(self.out, (bb, bo)) {
                    continue;
                }
                for &(w, z) in inner.iter().filter(|&&(w, _)| w != b) {
                    if has_tree_arc(self.out, (w, z)) {
                        continue;
                    }
                    let mut i = vec![(w, z), (b, bo)];
                    i.extend(xs.iter().filter(|&&r| r != b && r != w).map(|&r| (r, a)));
                    if let Some(p) = self.attempt(&[(w, a)], &i) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }

    fn candidates(&self, mode: ExtensionMode) -> Option<(Tree, Tree)> {
        match mode {
            ExtensionMode::NoArc => self.no_arc(self.xs, self.ys),
            ExtensionMode::InTreeArc { a, b } => self.in_tree_arc(a, b),
            ExtensionMode::BackArc { a, b } => self.back_arc(a, b),
        }
    }
}

fn single_or_tree_arc(d: &Digraph, set: &[usize], t: &Tree) -> bool {
    match set.len() {
        1 => true,
        2 => {
            let arcs = arcs_within(d, set);
            arcs.len() == 1 && has_tree_arc(t, arcs[0])
        }
        _ => false,
    }
}

fn shape_holds(inst: &Inst, mode: ExtensionMode, shape: ExtensionObstruction) -> bool {
    let (d, xs, ys) = (inst.d, inst.xs, inst.ys);
    let xp = inst.x_prime(xs);
    let yp = inst.y_prime(ys);
    let inner_x = arcs_within(d, xs);
    let inner_y = arcs_within(d, ys);
    match (mode, shape) {
        (ExtensionMode::NoArc, ExtensionObstruction::NoArcSmall) => {
            xp.is_empty()
                && yp.is_empty()
                && xs.len() + ys.len() <= 3
                && single_or_tree_arc(d, xs, inst.out)
                && single_or_tree_arc(d, ys, inst.inn)
        }
        (ExtensionMode::InTreeArc { a, b }, ExtensionObstruction::InTreeArcSaturated) => {
            xp == [b]
                && xs == [b]
                && !inst.out.covered[a]
                && xs
                    .iter()
                    .chain(ys)
                    .all(|&r| r == a || !d.has_arc(r, a) || has_tree_arc(inst.inn, (r, a)))
        }
        (ExtensionMode::InTreeArc { b, .. }, ExtensionObstruction::InTreeArcSmall) => {
            let xb = minus(xs, &[b]);
            xp == [b]
                && !xb.is_empty()
                && xb.len() + ys.len() <= 3
                && single_or_tree_arc(d, &xb, inst.out)
                && single_or_tree_arc(d, ys, inst.inn)
                && inner_x
                    .iter()
                    .all(|&e| e.0 == b || has_tree_arc(inst.out, e))
        }
        (ExtensionMode::BackArc { a, b }, ExtensionObstruction::BackArcSquare) => {
            if xs.len() != 2 || ys.len() != 2 {
                return false;
            }
            let x = minus(xs, &[b])[0];
            let y = minus(ys, &[a])[0];
            inner_x == [(b, x)]
                && inner_y == [(y, a)]
                && (has_tree_arc(inst.out, (b, x)) || has_tree_arc(inst.inn, (y, a)))
        }
        (ExtensionMode::BackArc { a, b }, ExtensionObstruction::BackArcSingleY) => {
            ys == [a]
                && (inner_x
                    .iter()
                    .all(|&e| e.0 != b || has_tree_arc(inst.out, e))
                    || inner_x
                        .iter()
                        .all(|&e| e.0 == b || has_tree_arc(inst.out, e)))
        }
        (ExtensionMode::BackArc { a, b }, ExtensionObstruction::BackArcSingleX) => {
            xs == [b]
                && (inner_y
                    .iter()
                    .all(|&e| e.1 != a || has_tree_arc(inst.inn, e))
                    || inner_y
                        .iter()
                        .all(|&e| e.1 == a || has_tree_arc(inst.inn, e)))
        }
        _ => false,
    }
}

fn shapes_for(mode: ExtensionMode) -> &'static [ExtensionObstruction] {
    match mode {
        ExtensionMode::NoArc => &[ExtensionObstruction::NoArcSmall],
        ExtensionMode::InTreeArc { .. } => &[
            ExtensionObstruction::InTreeArcSaturated,
            ExtensionObstruction::InTreeArcSmall,
        ],
        ExtensionMode::BackArc { .. } => &[
            ExtensionObstruction::BackArcSquare,
            ExtensionObstruction::BackArcSingleY,
            ExtensionObstruction::BackArcSingleX,
        ],
    }
}

fn check_preconditions(inst: &Inst, mode: ExtensionMode) -> Result<(), String> {
    let Inst {
        d,
        out,
        inn,
        xs,
        ys,
    } = *inst;
    let n = d.n();
    if xs.is_empty() || ys.is_empty() {
        return Err("X and Y must be nonempty".into());
    }
    let mut side = vec![0u8; n];
    for (s, set) in [(1u8, xs), (2u8, ys)] {
        for &z in set {
            if z >= n || side[z] != 0 {
                return Err(format!("vertex {z} repeated or out of range"));
            }
            side[z] = s;
        }
    }
    if out.kind != TreeKind::Out || inn.kind != TreeKind::In {
        return Err("expected an out-tree and an in-tree".into());
    }
    out.verify(d)?;
    inn.verify(d)?;
    if xs.iter().any(|&z| !out.covered[z]) || ys.iter().any(|&z| !inn.covered[z]) {
        return Err("T+ must cover X and T- must cover Y".into());
    }
    let oa = out.arcs();
    let ia = inn.arcs();
    if ia.iter().any(|e| oa.binary_search(e).is_ok()) {
        return Err("trees share an arc".into());
    }
    let used = |e: (usize, usize)| oa.binary_search(&e).is_ok() || ia.binary_search(&e).is_ok();
    let special = match mode {
        ExtensionMode::NoArc => None,
        ExtensionMode::InTreeArc { a, b } | ExtensionMode::BackArc { a, b } => {
            if a >= n || b >= n || side[a] != 2 || side[b] != 1 {
                return Err("a must lie in Y and b in X".into());
            }
            Some((a, b))
        }
    };
    for &x in xs {
        for &y in ys {
            if special == Some((y, x)) {
                if let ExtensionMode::InTreeArc { .. } = mode {
                    let toward_x = has_tree_arc(inn, (y, x));
                    if !toward_x && !has_tree_arc(inn, (x, y)) {
                        return Err("the arc between a and b is not in T-".into());
                    }
                    if toward_x && d.has_arc(x, y) && used((x, y)) {
                        return Err(format!("arc {x} -> {y} is used"));
                    }
                    if !toward_x && d.has_arc(y, x) {
                        return Err(format!("arc {y} -> {x} goes from Y to X"));
                    }
                } else if used((x, y)) || used((y, x)) {
                    return Err(format!("an arc between {x} and {y} is used"));
                }
                continue;
            }
            if !d.has_arc(x, y) {
                return Err(format!("{x} does not dominate {y}"));
            }
            if mode != ExtensionMode::NoArc && d.has_arc(y, x) {
                return Err(format!("arc {y} -> {x} goes from Y to X"));
            }
            if used((x, y)) || used((y, x)) {
                return Err(format!("an arc between {x} and {y} is used"));
            }
        }
    }
    if let ExtensionMode::BackArc { a, b } = mode {
        if !d.has_arc(a, b) {
            return Err(format!("{a} -> {b} is not an arc"));
        }
        if xs.iter().any(|&z| inn.covered[z]) || ys.iter().any(|&z| out.covered[z]) {
            return Err("back-arc mode needs X' and Y' empty".into());
        }
    }
    Ok(())
}

/// Extends `(T+, T-)` to arc-disjoint trees covering `X ∪ Y`, or reports
/// why the lemmas' augmentations do not apply.
pub fn extend_trees_across_cut(
    d: &Digraph,
    t_out: &Tree,
    t_in: &Tree,
    x: &[usize],
    y: &[usize],
    mode: ExtensionMode,
) -> Result<ExtensionOutcome> {
    let inst = Inst {
        d,
        out: t_out,
        inn: t_in,
        xs: x,
        ys: y,
    };
    check_preconditions(&inst, mode).map_err(Error::PreconditionViolated)?;
    if let Some((o, i)) = inst.candidates(mode) {
        return Ok(ExtensionOutcome::Extended(o, i));
    }
    if !matches!(mode, ExtensionMode::InTreeArc { .. }) {
        let dr = d.reversed();
        let (ro, ri) = (t_in.reversed(), t_out.reversed());
        let rev = Inst {
            d: &dr,
            out: &ro,
            inn: &ri,
            xs: y,
            ys: x,
        };
        if let Some((o, i)) = rev.candidates(mode.reversed()) {
            return Ok(ExtensionOutcome::Extended(i.reversed(), o.reversed()));
        }
    }
    for &shape in shapes_for(mode) {
        if shape_holds(&inst, mode, shape) {
            return Ok(ExtensionOutcome::Obstructed(shape));
        }
    }
    Ok(ExtensionOutcome::Unresolved(format!(
        "no augmentation applies and no obstruction shape matches for |X| = {}, |Y| = {}",
        x.len(),
        y.len()
    )))
}

/// Re-checks the hypotheses and the claimed shape.
pub fn verify_extension_obstruction(
    d: &Digraph,
    t_out: &Tree,
    t_in: &Tree,
    x: &[usize],
    y: &[usize],
    mode: ExtensionMode,
    obstruction: ExtensionObstruction,
) -> Result<(), String> {
    let inst = Inst {
        d,
        out: t_out,
        inn: t_in,
        xs: x,
        ys: y,
    };
    check_preconditions(&inst, mode)?;
    if shape_holds(&inst, mode, obstruction) {
        Ok(())
    } else {
        Err(format!(
            "{obstruction:?} does not describe this configuration"
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial(n: usize, kind: TreeKind, r: usize) -> Tree {
        Tree::trivial(n, kind, r)
    }

    #[test]
    fn two_vertices_without_room() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let (o, i) = (trivial(2, TreeKind::Out, 0), trivial(2, TreeKind::In, 1));
        let r = extend_trees_across_cut(&d, &o, &i, &[0], &[1], ExtensionMode::NoArc).unwrap();
        assert_eq!(
            r,
            ExtensionOutcome::Obstructed(ExtensionObstruction::NoArcSmall)
        );
        verify_extension_obstruction(
            &d,
            &o,
            &i,
            &[0],
            &[1],
            ExtensionMode::NoArc,
            ExtensionObstruction::NoArcSmall,
        )
        .unwrap();
    }

    #[test]
    fn free_arc_in_x_extends() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (0, 2), (1, 2)]).unwrap();
        let o = Tree::from_arcs(3, TreeKind::Out, 0, &[(0, 1)]).unwrap();
        let i = trivial(3, TreeKind::In, 2);
        match extend_trees_across_cut(&d, &o, &i, &[0, 1], &[2], ExtensionMode::NoArc).unwrap() {
            ExtensionOutcome::Extended(o2, i2) => {
                assert!(o2.is_spanning() && i2.is_spanning());
                assert!(crate::branchings::arc_disjoint(&o2, &i2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn back_arc_digon_singletons() {
        let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        // b = 0 in X, a = 1 in Y.
        let (o, i) = (trivial(2, TreeKind::Out, 0), trivial(2, TreeKind::In, 1));
        let mode = ExtensionMode::BackArc { a: 1, b: 0 };
        let r = extend_trees_across_cut(&d, &o, &i, &[0], &[1], mode).unwrap();
        assert!(matches!(
            r,
            ExtensionOutcome::Obstructed(
                ExtensionObstruction::BackArcSingleY | ExtensionObstruction::BackArcSingleX
            )
        ));
    }

    #[test]
    fn preconditions_are_checked() {
        let d = Digraph::from_arcs(2, &[(1, 0)]).unwrap();
        let (o, i) = (trivial(2, TreeKind::Out, 0), trivial(2, TreeKind::In, 1));
        assert!(matches!(
            extend_trees_across_cut(&d, &o, &i, &[0], &[1], ExtensionMode::NoArc),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            extend_trees_across_cut(&d, &o, &i, &[0], &[0], ExtensionMode::NoArc),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn in_tree_arc_mode_extends_path() {
        // X = {0, 1} strong, Y = {2}; T- = 2 -> 0 (a = 2, b = 0), T+ = 0 -> 1.
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (2, 0), (0, 2), (1, 2)]).unwrap();
        let o = Tree::from_arcs(3, TreeKind::Out, 0, &[(0, 1)]).unwrap();
        let i = Tree::from_arcs(3, TreeKind::In, 0, &[(2, 0)]).unwrap();
        let mode = ExtensionMode::InTreeArc { a: 2, b: 0 };
        match extend_trees_across_cut(&d, &o, &i, &[0, 1], &[2], mode).unwrap() {
            ExtensionOutcome::Extended(o2, i2) => {
                o2.verify(&d).unwrap();
                i2.verify(&d).unwrap();
                assert!(o2.is_spanning() && i2.is_spanning());
            }
            other => panic!("{other:?}"),
        }
    }
}
