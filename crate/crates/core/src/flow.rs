//! Unit-capacity flows on arcs, used for Menger-type path counts and cuts.
//!
//! Flow is kept as a net-flow matrix. A digon `a <-> b` gives both
//! directions capacity one, and net flow `+1` on `(a, b)` means the arc
//! `a -> b` carries flow. Capacities never exceed one, so a single
//! augmenting BFS per unit is enough.

use std::collections::VecDeque;

use crate::digraph::{ArcPath, Digraph};

/// Result of a capped unit-capacity flow computation.
#[derive(Debug, Clone)]
pub struct Flow {
    pub value: usize,
    n: usize,
    net: Vec<i8>,
    /// Vertices reachable from the sources in the final residual graph.
    pub source_side: Vec<bool>,
}

impl Flow {
    /// Arcs carrying flow, lexicographic.
    pub fn flow_arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.net[a * self.n + b] > 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Decomposes the flow into `value` arc-disjoint paths. Cycles in the
    /// flow are skipped over, so paths are simple.
    pub fn paths(&self, sources: &[usize], sinks: &[usize]) -> Vec<ArcPath> {
        let n = self.n;
        let mut left: Vec<i8> = self.net.iter().map(|&x| x.max(0)).collect();
        let is_sink = member_mask(n, sinks);
        let mut paths = Vec::new();
        // Excess at each source equals the number of paths starting there.
        for &s in sources {
            loop {
                let out: i32 = (0..n).map(|b| left[s * n + b] as i32).sum();
                let inn: i32 = (0..n).map(|a| left[a * n + s] as i32).sum();
                if out <= inn || is_sink[s] && out == 0 {
                    break;
                }
                let mut walk = vec![s];
                let mut pos = vec![usize::MAX; n];
                pos[s] = 0;
                let mut x = s;
                while !is_sink[x] {
                    let y = (0..n)
                        .find(|&y| left[x * n + y] > 0)
                        .expect("flow conservation");
                    left[x * n + y] -= 1;
                    if pos[y] != usize::MAX {
                        // Drop the cycle closed by this arc.
                        for &z in &walk[pos[y] + 1..] {
                            pos[z] = usize::MAX;
                        }
                        walk.truncate(pos[y] + 1);
                    } else {
                        pos[y] = walk.len();
                        walk.push(y);
                    }
                    x = y;
                }
                paths.push(ArcPath::new(walk));
                if paths.len() == self.value {
                    return paths;
                }
            }
        }
        paths
    }

    /// Minimal sink-side cut: vertices that can still reach a sink in the
    /// residual graph.
    pub fn sink_side(&self, d: &Digraph, sinks: &[usize]) -> Vec<bool> {
        let n = self.n;
        let mut seen = member_mask(n, sinks);
        let mut queue: VecDeque<usize> = sinks.iter().copied().collect();
        while let Some(y) = queue.pop_front() {
            for x in 0..n {
                if !seen[x] && residual(d, &self.net, n, x, y) {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
        seen
    }
}

fn member_mask(n: usize, xs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in xs {
        m[x] = true;
    }
    m
}

#[inline]
fn residual(d: &Digraph, net: &[i8], n: usize, a: usize, b: usize) -> bool {
    let cap = d.has_arc(a, b) as i8;
    cap - net[a * n + b] > 0
}

/// Maximum number of arc-disjoint paths from `sources` to `sinks`, capped at
/// `limit`. Sources and sinks must be disjoint.
pub fn max_flow(d: &Digraph, sources: &[usize], sinks: &[usize], limit: usize) -> Flow {
    let n = d.n();
    let mut net = vec![0i8; n * n];
    let is_sink = member_mask(n, sinks);
    let mut value = 0;
    let mut parent = vec![usize::MAX; n];
    loop {
        let mut seen = member_mask(n, sources);
        let mut queue: VecDeque<usize> = sources.iter().copied().collect();
        let mut hit = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if !seen[y] && residual(d, &net, n, x, y) {
                    seen[y] = true;
                    parent[y] = x;
                    if is_sink[y] {
                        hit = Some(y);
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        match hit {
            Some(t) if value < limit => {
                let mut y = t;
                while !sources.contains(&y) {
                    let x = parent[y];
                    net[x * n + y] += 1;
                    net[y * n + x] -= 1;
                    y = x;
                }
                value += 1;
            }
            _ => {
                if value >= limit && hit.is_some() {
                    // Capped: report the residual reachability as is.
                    let mut full = member_mask(n, sources);
                    let mut q: VecDeque<usize> = sources.iter().copied().collect();
                    while let Some(x) = q.pop_front() {
                        for y in 0..n {
                            if !full[y] && residual(d, &net, n, x, y) {
                                full[y] = true;
                                q.push_back(y);
                            }
                        }
                    }
                    seen = full;
                }
                return Flow {
                    value,
                    n,
                    net,
                    source_side: seen,
                };
            }
        }
    }
}

/// A maximum (capped at `k`) family of pairwise arc-disjoint `(s, t)`-paths.
pub fn arc_disjoint_paths(d: &Digraph, s: usize, t: usize, k: usize) -> Vec<ArcPath> {
    if s == t {
        return Vec::new();
    }
    max_flow(d, &[s], &[t], k).paths(&[s], &[t])
}

/// `min(k, lambda(s, t))`.
pub fn local_arc_connectivity(d: &Digraph, s: usize, t: usize, k: usize) -> usize {
    max_flow(d, &[s], &[t], k).value
}

/// Whether `D` stays strong after deleting any `k - 1` arcs.
pub fn is_k_arc_strong(d: &Digraph, k: usize) -> bool {
    let n = d.n();
    if n < 2 {
        return k == 0 || n == 1;
    }
    (1..n)
        .all(|v| local_arc_connectivity(d, 0, v, k) >= k && local_arc_connectivity(d, v, 0, k) >= k)
}
