//! Builders for the named graph families and the edge-rewiring move used to
//! replay proof transformations.
//!
//! `U_n^d` numbering: path vertices `0..=d`, the extra 4-cycle vertex is
//! `d + 1` (adjacent to path vertices 1 and 3), and surplus pendants
//! `d + 2..n` hang off path vertex 1.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The cycle `C_n`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The extremal graph `U_n^d` for `4 <= d <= n - 2`.
pub fn build_u_n_d(n: usize, d: usize) -> Result<Graph> {
    if d < 4 || d + 2 > n {
        return Err(Error::input(format!(
            "U_n^d needs 4 <= d <= n - 2, got n = {n}, d = {d}"
        )));
    }
    let apex = d + 1;
    let mut edges: Vec<_> = (0..d).map(|i| (i, i + 1)).collect();
    edges.push((1, apex));
    edges.push((3, apex));
    edges.extend((d + 2..n).map(|p| (1, p)));
    Graph::from_edges(n, &edges)
}

/// `U(n; a, b, c)`: a triangle on `0, 1, 2` carrying `a`, `b`, `c` pendants.
pub fn build_u_abc(n: usize, a: usize, b: usize, c: usize) -> Result<Graph> {
    if !(a >= b && b >= c) || a + b + c + 3 != n {
        return Err(Error::input(format!(
            "U(n,a,b,c) needs a >= b >= c >= 0 and a + b + c = n - 3, got ({n}, {a}, {b}, {c})"
        )));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut next = 3;
    for (corner, count) in [a, b, c].into_iter().enumerate() {
        for _ in 0..count {
            edges.push((corner, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Edges to delete and edges to insert, applied as one move.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewireSpec {
    pub removals: Vec<(usize, usize)>,
    pub additions: Vec<(usize, usize)>,
}

impl RewireSpec {
    pub fn new(removals: &[(usize, usize)], additions: &[(usize, usize)]) -> Self {
        RewireSpec {
            removals: removals.to_vec(),
            additions: additions.to_vec(),
        }
    }

    /// The move that undoes this one.
    pub fn swapped(&self) -> Self {
        RewireSpec {
            removals: self.additions.clone(),
            additions: self.removals.clone(),
        }
    }
}

fn norm((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `(E \ removals) ∪ additions`. Every removal must be present and every
/// addition must be absent after the removals.
pub fn rewire(g: &Graph, spec: &RewireSpec) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &e in &spec.removals {
        let e = norm(e);
        let pos = edges
            .iter()
            .position(|&x| x == e)
            .ok_or_else(|| Error::input(format!("cannot remove absent edge {e:?}")))?;
        edges.swap_remove(pos);
    }
    for &e in &spec.additions {
        let e = norm(e);
        if edges.contains(&e) {
            return Err(Error::input(format!("cannot add existing edge {e:?}")));
        }
        edges.push(e);
    }
    Graph::from_edges(g.order(), &edges)
}
