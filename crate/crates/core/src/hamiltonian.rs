//! Hamiltonian cycles and paths in semicomplete digraphs.

use serde::{Deserialize, Serialize};

use crate::digraph::{require_semicomplete, strong_decomposition, ArcPath, Digraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// The path starts at the prescribed vertex.
    Start,
    /// The path ends at the prescribed vertex.
    End,
}

/// Checks that `path` visits every vertex once along arcs of `d`.
pub fn verify_hamiltonian_path(d: &Digraph, path: &ArcPath) -> Result<(), String> {
    path.verify(d)?;
    if path.vertices.len() != d.n() {
        return Err(format!(
            "path covers {} of {} vertices",
            path.vertices.len(),
            d.n()
        ));
    }
    Ok(())
}

/// As [`verify_hamiltonian_path`], plus the closing arc back to the start.
pub fn verify_hamiltonian_cycle(d: &Digraph, cycle: &ArcPath) -> Result<(), String> {
    verify_hamiltonian_path(d, cycle)?;
    let (a, b) = (cycle.end(), cycle.start());
    if !d.has_arc(a, b) {
        return Err(format!("closing arc {a} -> {b} missing"));
    }
    Ok(())
}

/// A hamiltonian cycle of a strong semicomplete digraph on at least two
/// vertices, as a vertex sequence starting at 0 (the closing arc is implied).
pub fn hamiltonian_cycle(d: &Digraph) -> Result<ArcPath> {
    require_semicomplete(d)?;
    if d.n() < 2 {
        return Err(Error::TooSmall);
    }
    if !d.is_strong() {
        return Err(Error::NotStrong);
    }
    let cycle = cycle_by_insertion(d);
    verify_hamiltonian_cycle(d, &cycle).map_err(Error::InternalInconsistency)?;
    Ok(cycle)
}

fn cycle_by_insertion(d: &Digraph) -> ArcPath {
    let n = d.n();
    // Shortest cycle through 0: a shortest path to the nearest in-neighbour.
    let parent = d.bfs_out_tree(0);
    let depth = |mut y: usize| {
        let mut k = 0;
        while let Some(p) = parent[y] {
            y = p;
            k += 1;
        }
        k
    };
    let last = (1..n)
        .filter(|&x| d.has_arc(x, 0) && (parent[x].is_some()))
        .min_by_key(|&x| (depth(x), x))
        .expect("strong digraph has an arc into 0");
    let mut cycle = vec![last];
    let mut x = last;
    while let Some(p) = parent[x] {
        cycle.push(p);
        x = p;
    }
    cycle.reverse();

    let mut on = vec![false; n];
    for &c in &cycle {
        on[c] = true;
    }
    while cycle.len() < n {
        let len = cycle.len();
        let mut inserted = false;
        for x in (0..n).filter(|&x| !on[x]) {
            if let Some(i) =
                (0..len).find(|&i| d.has_arc(cycle[i], x) && d.has_arc(x, cycle[(i + 1) % len]))
            {
                cycle.insert(i + 1, x);
                on[x] = true;
                inserted = true;
                break;
            }
        }
        if inserted {
            continue;
        }
        // Every outside vertex now either dominates the cycle (set A) or is
        // dominated by it (set B). Strongness forces an arc from B to A.
        let (b, a) = (0..n)
            .filter(|&b| !on[b] && d.has_arc(cycle[0], b))
            .find_map(|b| {
                (0..n)
                    .find(|&a| !on[a] && d.has_arc(a, cycle[0]) && d.has_arc(b, a))
                    .map(|a| (b, a))
            })
            .expect("strong semicomplete digraph admits a B -> A arc");
        // cycle[len-1] -> b -> a -> cycle[0]
        cycle.push(b);
        cycle.push(a);
        on[a] = true;
        on[b] = true;
    }
    let start = cycle.iter().position(|&c| c == 0).expect("0 on cycle");
    cycle.rotate_left(start);
    ArcPath::new(cycle)
}

/// Hamiltonian path of a strong semicomplete digraph (single vertex allowed)
/// starting at `x`.
fn strong_path_from(d: &Digraph, x: usize) -> ArcPath {
    if d.n() == 1 {
        return ArcPath::trivial(x);
    }
    let mut c = cycle_by_insertion(d).vertices;
    let p = c.iter().position(|&y| y == x).expect("x on cycle");
    c.rotate_left(p);
    ArcPath::new(c)
}

/// Hamiltonian path covering the component vertex sets in order, where the
/// first component's path starts at `first` (if given) and the last one's
/// ends at `last` (if given).
fn chain(d: &Digraph, comps: &[Vec<usize>], first: Option<usize>, last: Option<usize>) -> ArcPath {
    let mut out = Vec::with_capacity(d.n());
    let p = comps.len();
    for (i, comp) in comps.iter().enumerate() {
        let sub = d.induced(comp);
        let local = |g: usize| {
            comp.iter()
                .position(|&y| y == g)
                .expect("vertex in component")
        };
        let path = if let (0, Some(f)) = (i, first) {
            strong_path_from(&sub, local(f))
        } else if let (true, Some(l)) = (i + 1 == p, last) {
            strong_path_from(&sub.reversed(), local(l)).reversed()
        } else {
            strong_path_from(&sub, 0)
        };
        out.extend(path.vertices.iter().map(|&l| comp[l]));
    }
    ArcPath::new(out)
}

/// Hamiltonian path starting (or ending) at `x`.
///
/// For `Start` the path exists iff `x` lies in the initial strong component;
/// a violation is reported as `NotStrong`. `End` is answered on the reversed
/// digraph.
pub fn hamiltonian_path_from(d: &Digraph, x: usize, direction: Direction) -> Result<ArcPath> {
    require_semicomplete(d)?;
    if x >= d.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: d.n(),
        });
    }
    if direction == Direction::End {
        return hamiltonian_path_from(&d.reversed(), x, Direction::Start).map(|p| p.reversed());
    }
    let sd = strong_decomposition(d);
    if !sd.in_initial(x) {
        return Err(Error::NotStrong);
    }
    let path = chain(d, &sd.components, Some(x), None);
    verify_hamiltonian_path(d, &path).map_err(Error::NoPath)?;
    Ok(path)
}

/// Hamiltonian `(x, y)`-path of a non-strong semicomplete digraph, with `x`
/// in the initial and `y` in the terminal component.
pub fn hamiltonian_path_between(d: &Digraph, x: usize, y: usize) -> Result<ArcPath> {
    require_semicomplete(d)?;
    let n = d.n();
    if x >= n || y >= n {
        return Err(Error::VertexOutOfRange {
            vertex: x.max(y),
            n,
        });
    }
    let sd = strong_decomposition(d);
    if sd.is_strong() {
        return Err(Error::Strong);
    }
    if !sd.in_initial(x) || !sd.in_terminal(y) {
        return Err(Error::BadEndpoints(format!(
            "{x} must lie in the initial and {y} in the terminal component"
        )));
    }
    let path = chain(d, &sd.components, Some(x), Some(y));
    verify_hamiltonian_path(d, &path).map_err(Error::InternalInconsistency)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cycle_of_c3_and_s4() {
        let c3 = fixtures::c3().digraph;
        assert_eq!(hamiltonian_cycle(&c3).unwrap().vertices, vec![0, 1, 2]);
        let s4 = fixtures::s4().digraph;
        let c = hamiltonian_cycle(&s4).unwrap();
        verify_hamiltonian_cycle(&s4, &c).unwrap();
    }

    #[test]
    fn cycle_requires_strong() {
        assert_eq!(
            hamiltonian_cycle(&fixtures::fig_b().digraph),
            Err(Error::NotStrong)
        );
        assert!(matches!(
            hamiltonian_cycle(&Digraph::new(2)),
            Err(Error::NotSemicomplete { a: 0, b: 1 })
        ));
    }

    #[test]
    fn paths_from_prescribed_vertex() {
        let c3 = fixtures::c3().digraph;
        assert_eq!(
            hamiltonian_path_from(&c3, 1, Direction::Start)
                .unwrap()
                .vertices,
            vec![1, 2, 0]
        );
        let k3 = fixtures::k3().digraph;
        let p = hamiltonian_path_from(&k3, 2, Direction::End).unwrap();
        assert_eq!(p.end(), 2);
        verify_hamiltonian_path(&k3, &p).unwrap();
        let s4 = fixtures::s4().digraph;
        let p = hamiltonian_path_from(&s4, 3, Direction::Start).unwrap();
        assert_eq!(p.start(), 3);
        verify_hamiltonian_path(&s4, &p).unwrap();
    }

    #[test]
    fn path_from_outside_initial_component_fails() {
        let b = fixtures::fig_b().digraph;
        assert_eq!(
            hamiltonian_path_from(&b, 1, Direction::Start),
            Err(Error::NotStrong)
        );
        assert_eq!(
            hamiltonian_path_from(&b, 0, Direction::Start)
                .unwrap()
                .vertices,
            vec![0, 1, 2]
        );
    }

    #[test]
    fn paths_between() {
        let b = fixtures::fig_b().digraph;
        assert_eq!(
            hamiltonian_path_between(&b, 0, 2).unwrap().vertices,
            vec![0, 1, 2]
        );
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(
            hamiltonian_path_between(&d, 0, 2).unwrap().vertices,
            vec![0, 1, 2]
        );
        assert_eq!(
            hamiltonian_path_between(&fixtures::c3().digraph, 0, 2),
            Err(Error::Strong)
        );
        assert!(matches!(
            hamiltonian_path_between(&b, 1, 2),
            Err(Error::BadEndpoints(_))
        ));
    }
}
