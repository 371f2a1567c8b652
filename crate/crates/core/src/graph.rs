//! Simple undirected graphs on vertices `0..n` and the metric and structural
//! queries the extremal arguments rely on: distances, diameter, the unique
//! cycle of a unicyclic graph, pendant vertices, and diametral paths.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Neighbor lists are
/// sorted and `degree(v) == neighbors(v).len()` always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Reversed and repeated pairs collapse
    /// into a single edge.
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// All-pairs hop distances. Errors on a disconnected graph.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n)
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::structure("graph is disconnected"))
            })
            .collect()
    }

    /// Largest eccentricity, measured in edges.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::structure("diameter of the empty graph"));
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::structure("graph is disconnected")),
                }
            }
        }
        Ok(best)
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.edges.len() == self.n && self.is_connected()
    }

    /// Vertices of the unique cycle in traversal order: starts at the smallest
    /// cycle vertex and continues towards its smaller cycle neighbor.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if !self.is_unicyclic() {
            return Err(Error::structure("graph is not unicyclic"));
        }
        // Strip leaves until only the cycle is left.
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adjacency[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }

        let on_cycle = |v: usize| alive[v];
        let start = (0..self.n)
            .find(|&v| on_cycle(v))
            .ok_or_else(|| Error::structure("no cycle left after leaf stripping"))?;
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = self.adjacency[start]
            .iter()
            .copied()
            .find(|&w| on_cycle(w))
            .ok_or_else(|| Error::structure("isolated cycle vertex"))?;
        while cur != start {
            cycle.push(cur);
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&w| on_cycle(w) && w != prev)
                .ok_or_else(|| Error::structure("broken cycle"))?;
            prev = cur;
            cur = next;
        }
        Ok(cycle)
    }

    /// Vertices of degree one, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Neighbors of `v` whose degree is at least two.
    pub fn non_pendant_neighbors(&self, v: usize) -> Vec<usize> {
        self.adjacency[v]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) >= 2)
            .collect()
    }

    /// The graph with `v` deleted; labels above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Graph::from_edges(self.n - 1, &edges).expect("relabelled edges stay valid")
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Every shortest path whose length equals the diameter, each reported
    /// once from its smaller endpoint.
    pub fn diametral_paths(&self) -> Result<Vec<Vec<usize>>> {
        let dist = self.distance_matrix()?;
        let diam = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut paths = Vec::new();
        for s in 0..self.n {
            for t in s + 1..self.n {
                if dist[s][t] != diam {
                    continue;
                }
                let mut path = vec![s];
                self.extend_geodesics(&dist, t, &mut path, &mut paths);
            }
        }
        Ok(paths)
    }

    fn extend_geodesics(
        &self,
        dist: &[Vec<usize>],
        target: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path is never empty");
        if last == target {
            out.push(path.clone());
            return;
        }
        for &w in &self.adjacency[last] {
            if dist[w][target] + 1 == dist[last][target] {
                path.push(w);
                self.extend_geodesics(dist, target, path, out);
                path.pop();
            }
        }
    }
}

/// Text format: a header line `n m`, then one `u v` line per edge.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::input("missing `n m` header line"))?;
        let (n, m) = parse_pair(header)?;
        let mut edge_list = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edge_list.push(parse_pair(line)?);
        }
        if edge_list.len() != m {
            return Err(Error::input(format!(
                "header announces {m} edges, found {}",
                edge_list.len()
            )));
        }
        if lines.next().is_some() {
            return Err(Error::input("trailing lines after the edge list"));
        }
        Graph::from_edges(n, &edge_list)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::input(format!("expected two integers in `{line}`")))?
            .parse()
            .map_err(|_| Error::input(format!("bad integer in `{line}`")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::input(format!("expected two integers in `{line}`")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn u64_graph() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn triangle_and_dedup() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        let e = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(e.size(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn degree_table_of_small_extremal_graph() {
        let g = u64_graph();
        let mut d = g.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(d.iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn diameters() {
        assert_eq!(path(5).diameter().unwrap(), 4);
        assert_eq!(cycle(6).diameter().unwrap(), 3);
        assert_eq!(u64_graph().diameter().unwrap(), 4);
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(split.diameter(), Err(Error::Structure(_))));
    }

    #[test]
    fn unicyclic_detection() {
        assert!(cycle(5).is_unicyclic());
        assert!(!path(4).is_unicyclic());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two_triangles.size(), two_triangles.order());
        assert!(!two_triangles.is_unicyclic());
    }

    #[test]
    fn cycle_extraction() {
        assert_eq!(cycle(4).unique_cycle().unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(u64_graph().unique_cycle().unwrap(), vec![1, 2, 3, 5]);
        // triangle 0,1,2 with one pendant on each corner
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(g.unique_cycle().unwrap(), vec![0, 1, 2]);
        assert!(matches!(path(4).unique_cycle(), Err(Error::Structure(_))));
    }

    #[test]
    fn pendants_and_q_sets() {
        assert!(cycle(5).pendant_vertices().is_empty());
        assert_eq!(u64_graph().pendant_vertices(), vec![0, 4]);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.pendant_vertices(), vec![1, 2, 3, 4]);
        assert_eq!(u64_graph().non_pendant_neighbors(1), vec![2, 5]);
        assert!(star.non_pendant_neighbors(0).is_empty());
        assert_eq!(cycle(5).non_pendant_neighbors(2), vec![1, 3]);
    }

    #[test]
    fn remove_pendant_keeps_unicyclic() {
        let g = u64_graph().remove_vertex(0);
        assert!(g.is_unicyclic());
        assert_eq!(g.order(), 5);
        assert_eq!(g.diameter().unwrap(), 3);
    }

    #[test]
    fn diametral_paths_of_small_extremal_graph() {
        let mut paths = u64_graph().diametral_paths().unwrap();
        paths.sort();
        assert_eq!(paths, vec![vec![0, 1, 2, 3, 4], vec![0, 1, 5, 3, 4]]);
    }

    #[test]
    fn text_format_round_trip() {
        let g = u64_graph();
        let text = g.to_string();
        assert!(text.starts_with("6 6\n"));
        assert!(text.ends_with('\n'));
        assert_eq!(text.parse::<Graph>().unwrap(), g);
        assert!("3 2\n0 1\n".parse::<Graph>().is_err());
        assert!("3 1\n0 x\n".parse::<Graph>().is_err());
    }
}
