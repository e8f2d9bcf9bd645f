//! Brute-force isomorphism for very small digraphs.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const ISO_LIMIT: usize = 6;

/// Finds a bijection `f` with `a -> b` in `d` iff `f(a) -> f(b)` in `h`.
///
/// `pins` lists pairs `(x, y)` that must satisfy `f(x) = y`. The result is
/// `f` as a vector indexed by vertices of `d`; the lexicographically first
/// such permutation is returned.
pub fn small_isomorphism(
    d: &Digraph,
    h: &Digraph,
    pins: &[(usize, usize)],
) -> Result<Option<Vec<usize>>> {
    if d.n() != h.n() {
        return Err(Error::SizeMismatch(d.n(), h.n()));
    }
    let n = d.n();
    if n > ISO_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ISO_LIMIT,
        });
    }
    for &(x, y) in pins {
        if x >= n || y >= n {
            return Err(Error::VertexOutOfRange {
                vertex: x.max(y),
                n,
            });
        }
    }
    if d.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in pins {
        if map[x] != usize::MAX && map[x] != y || map[x] == usize::MAX && used[y] {
            return Ok(None);
        }
        map[x] = y;
        used[y] = true;
    }
    Ok(extend(d, h, 0, &mut map, &mut used).then_some(map))
}

fn consistent(d: &Digraph, h: &Digraph, x: usize, map: &[usize]) -> bool {
    (0..d.n()).all(|y| {
        map[y] == usize::MAX
            || d.has_arc(x, y) == h.has_arc(map[x], map[y])
                && d.has_arc(y, x) == h.has_arc(map[y], map[x])
    })
}

fn extend(d: &Digraph, h: &Digraph, x: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = d.n();
    if x == n {
        return true;
    }
    if map[x] != usize::MAX {
        return consistent(d, h, x, map) && extend(d, h, x + 1, map, used);
    }
    for y in 0..n {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(d, h, x, map) && extend(d, h, x + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Checks that `map` is an isomorphism from `d` onto `h`, independently of
/// the search above.
pub fn is_isomorphism(d: &Digraph, h: &Digraph, map: &[usize]) -> bool {
    let n = d.n();
    if h.n() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    d.arcs().iter().all(|&(a, b)| h.has_arc(map[a], map[b])) && d.arc_count() == h.arc_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig_e_matches_fig_f() {
        let e = fixtures::fig_e().digraph;
        let f = fixtures::fig_f().digraph;
        let map = small_isomorphism(&e, &f, &[]).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&e, &f, &map));
    }

    #[test]
    fn strong_and_non_strong_differ() {
        let c3 = fixtures::c3().digraph;
        let b = fixtures::fig_b().digraph;
        assert_eq!(small_isomorphism(&c3, &b, &[]).unwrap(), None);
    }

    #[test]
    fn pinned_identity() {
        let a = fixtures::fig_a().digraph;
        assert_eq!(
            small_isomorphism(&a, &a, &[(0, 0), (1, 1)]).unwrap(),
            Some(vec![0, 1])
        );
        assert_eq!(small_isomorphism(&a, &a, &[(0, 1)]).unwrap(), None);
    }

    #[test]
    fn size_mismatch() {
        let a = fixtures::fig_a().digraph;
        let b = fixtures::fig_b().digraph;
        assert_eq!(
            small_isomorphism(&a, &b, &[]),
            Err(Error::SizeMismatch(2, 3))
        );
    }
}
