//! Exhaustive generation of unicyclic graphs up to isomorphism and the
//! extremal search built on it.
//!
//! Two generators with unrelated failure modes:
//!
//! * [`enumerate_unicyclic`] places a canonical rooted tree on every vertex of
//!   a cycle and keeps one tree sequence per dihedral orbit.
//! * [`enumerate_unicyclic_labeled`] decodes every Prüfer sequence and closes
//!   each tree with every possible extra edge.
//!
//! Both report classes in ascending certificate order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_certificate, Certificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::{index_value, IndexKind, Tolerance};

/// Largest order handled by the structured generator.
pub const MAX_STRUCTURED_ORDER: usize = 12;
/// Largest order handled by the labeled oracle.
pub const MAX_LABELED_ORDER: usize = 8;

/// A rooted tree stored as the sorted ids of its root's subtrees.
#[derive(Debug, Clone)]
struct RootedTree {
    size: usize,
    children: Vec<usize>,
}

/// All rooted trees up to isomorphism with at most `max_size` vertices, ids
/// ordered by size.
#[derive(Debug)]
struct RootedForestCatalog {
    trees: Vec<RootedTree>,
    by_size: Vec<Vec<usize>>,
}

impl RootedForestCatalog {
    fn new(max_size: usize) -> Self {
        let mut cat = RootedForestCatalog {
            trees: Vec::new(),
            by_size: vec![Vec::new(); max_size + 1],
        };
        for size in 1..=max_size {
            let mut children = Vec::new();
            let mut found = Vec::new();
            cat.child_multisets(size - 1, usize::MAX, &mut children, &mut found);
            for kids in found {
                cat.by_size[size].push(cat.trees.len());
                cat.trees.push(RootedTree {
                    size,
                    children: kids,
                });
            }
        }
        cat
    }

    /// Non-increasing id sequences of total size `remaining` with ids at most
    /// `cap`; each multiset of subtrees appears once.
    fn child_multisets(
        &self,
        remaining: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for id in (0..self.trees.len().min(cap.saturating_add(1))).rev() {
            let s = self.trees[id].size;
            if s <= remaining {
                current.push(id);
                self.child_multisets(remaining - s, id, current, out);
                current.pop();
            }
        }
    }

    #[cfg(test)]
    fn count(&self, size: usize) -> usize {
        self.by_size.get(size).map_or(0, Vec::len)
    }

    /// Appends the non-root vertices of tree `id`, rooted at `root`.
    fn attach(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &child in &self.trees[id].children {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.attach(child, v, next, edges);
        }
    }
}

/// `true` when `seq` is the lexicographically smallest of its rotations and
/// reflections.
fn is_dihedral_minimum(seq: &[usize]) -> bool {
    let g = seq.len();
    for shift in 0..g {
        let rotated = (0..g).map(|i| seq[(i + shift) % g]);
        if rotated.cmp(seq.iter().copied()) == std::cmp::Ordering::Less {
            return false;
        }
        let reflected = (0..g).map(|i| seq[(shift + g - i) % g]);
        if reflected.cmp(seq.iter().copied()) == std::cmp::Ordering::Less {
            return false;
        }
    }
    true
}

fn check_bounds(n: usize, max: usize, what: &str) -> Result<()> {
    if !(3..=max).contains(&n) {
        return Err(Error::capability(format!(
            "{what} enumeration supports 3 <= n <= {max}, got {n}"
        )));
    }
    Ok(())
}

/// One representative per isomorphism class of unicyclic graphs of order `n`,
/// ascending by certificate.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<(Certificate, Graph)>> {
    check_bounds(n, MAX_STRUCTURED_ORDER, "structured")?;
    let catalog = RootedForestCatalog::new(n - 2);

    // Work units: (cycle length, size of the tree on cycle position 0).
    let partitions: Vec<(usize, usize)> = (3..=n)
        .flat_map(|g| (1..=n - g + 1).map(move |s| (g, s)))
        .collect();

    let parts: Vec<Vec<(Certificate, Graph)>> = partitions
        .par_iter()
        .map(|&(g, first)| structured_partition(&catalog, n, g, first))
        .collect::<Result<_>>()?;

    let mut classes = BTreeMap::new();
    for (cert, graph) in parts.into_iter().flatten() {
        classes.entry(cert).or_insert(graph);
    }
    Ok(classes.into_iter().collect())
}

fn structured_partition(
    catalog: &RootedForestCatalog,
    n: usize,
    g: usize,
    first: usize,
) -> Result<Vec<(Certificate, Graph)>> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(g);
    for &t0 in &catalog.by_size[first] {
        seq.push(t0);
        fill_positions(catalog, n - first, g - 1, &mut seq, &mut |seq| {
            if !is_dihedral_minimum(seq) {
                return Ok(());
            }
            let graph = assemble(catalog, n, seq)?;
            out.push((canonical_certificate(&graph)?, graph));
            Ok(())
        })?;
        seq.pop();
    }
    Ok(out)
}

fn fill_positions(
    catalog: &RootedForestCatalog,
    remaining: usize,
    slots: usize,
    seq: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if slots == 0 {
        return if remaining == 0 { emit(seq) } else { Ok(()) };
    }
    // every later slot needs at least its root
    for size in 1..=remaining + 1 - slots {
        for &id in &catalog.by_size[size] {
            // lexicographic minimality forces position 0 to hold the smallest id
            if id < seq[0] {
                continue;
            }
            seq.push(id);
            fill_positions(catalog, remaining - size, slots - 1, seq, emit)?;
            seq.pop();
        }
    }
    Ok(())
}

fn assemble(catalog: &RootedForestCatalog, n: usize, seq: &[usize]) -> Result<Graph> {
    let g = seq.len();
    let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for (pos, &id) in seq.iter().enumerate() {
        catalog.attach(id, pos, &mut next, &mut edges);
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

/// Decodes a Prüfer sequence over `0..n` into its labeled tree.
pub fn prufer_decode(n: usize, code: &[usize]) -> Result<Graph> {
    if n < 2 || code.len() + 2 != n || code.iter().any(|&c| c >= n) {
        return Err(Error::input(
            "Prüfer sequence must have length n - 2 over 0..n",
        ));
    }
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

/// Certificates of all unicyclic classes of order `n`, from labeled trees.
///
/// Labeled trees are first reduced to their isomorphism classes; closing
/// isomorphic trees with every non-edge yields the same classes, so nothing
/// is lost.
pub fn enumerate_unicyclic_labeled(n: usize) -> Result<BTreeSet<Certificate>> {
    check_bounds(n, MAX_LABELED_ORDER, "labeled")?;
    let total = n.pow((n - 2) as u32);
    let trees: BTreeSet<Certificate> = (0..total)
        .into_par_iter()
        .map(|mut k| {
            let mut code = vec![0usize; n - 2];
            for slot in code.iter_mut() {
                *slot = k % n;
                k /= n;
            }
            canonical_certificate(&prufer_decode(n, &code)?)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();

    let mut classes = BTreeSet::new();
    for tree in trees {
        let tree = tree.to_graph();
        for u in 0..n {
            for v in u + 1..n {
                if tree.has_edge(u, v) {
                    continue;
                }
                let mut edges = tree.edges().to_vec();
                edges.push((u, v));
                classes.insert(canonical_certificate(&Graph::from_edges(n, &edges)?)?);
            }
        }
    }
    Ok(classes)
}

/// Optimization sense of an extremal query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Max => "max",
            Direction::Min => "min",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Direction::Max),
            "min" => Ok(Direction::Min),
            _ => Err(Error::input(format!(
                "unknown direction `{s}` (expected max|min)"
            ))),
        }
    }
}

/// One enumerated class with the data every query needs.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub certificate: Certificate,
    pub graph: Graph,
    pub diameter: usize,
}

/// All unicyclic classes of a fixed order, with diameters precomputed.
#[derive(Debug, Clone)]
pub struct UnicyclicClasses {
    pub n: usize,
    pub classes: Vec<ClassInfo>,
}

impl UnicyclicClasses {
    pub fn new(n: usize) -> Result<Self> {
        let classes = enumerate_unicyclic(n)?
            .into_par_iter()
            .map(|(certificate, graph)| {
                let diameter = graph.diameter()?;
                Ok(ClassInfo {
                    certificate,
                    graph,
                    diameter,
                })
            })
            .collect::<Result<_>>()?;
        Ok(UnicyclicClasses { n, classes })
    }

    /// Diameters that occur, ascending.
    pub fn diameters(&self) -> BTreeSet<usize> {
        self.classes.iter().map(|c| c.diameter).collect()
    }

    pub fn with_diameter(&self, d: Option<usize>) -> impl Iterator<Item = &ClassInfo> {
        self.classes
            .iter()
            .filter(move |c| d.is_none_or(|d| c.diameter == d))
    }

    /// Best value of `kind` among classes with diameter `d` (or all classes),
    /// collecting every class within tolerance of the optimum.
    pub fn extremal(
        &self,
        d: Option<usize>,
        kind: IndexKind,
        direction: Direction,
        tol: Tolerance,
    ) -> Result<ExtremalRecord> {
        let scored: Vec<(f64, &Certificate)> = self
            .with_diameter(d)
            .map(|c| (index_value(&c.graph, kind), &c.certificate))
            .collect();
        let better = |a: f64, b: f64| match direction {
            Direction::Max => a > b,
            Direction::Min => a < b,
        };
        let best = scored
            .iter()
            .map(|&(v, _)| v)
            .reduce(|a, b| if better(b, a) { b } else { a })
            .ok_or_else(|| {
                let observed: Vec<String> =
                    self.diameters().iter().map(|d| d.to_string()).collect();
                Error::Domain(format!(
                    "no unicyclic graph of order {} has diameter {}; observed diameters: {}",
                    self.n,
                    d.map_or("any".into(), |d| d.to_string()),
                    observed.join(",")
                ))
            })?;
        let optima: BTreeSet<Certificate> = scored
            .iter()
            .filter(|&&(v, _)| tol.eq(v, best))
            .map(|&(_, c)| c.clone())
            .collect();
        Ok(ExtremalRecord {
            n: self.n,
            d,
            kind,
            direction,
            value: best,
            optima,
            count_searched: scored.len(),
        })
    }
}

/// Outcome of an extremal query.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub n: usize,
    pub d: Option<usize>,
    pub kind: IndexKind,
    pub direction: Direction,
    pub value: f64,
    pub optima: BTreeSet<Certificate>,
    pub count_searched: usize,
}

impl ExtremalRecord {
    /// The optimum when it is attained by exactly one class.
    pub fn unique_optimum(&self) -> Option<&Certificate> {
        match self.optima.len() {
            1 => self.optima.iter().next(),
            _ => None,
        }
    }
}

/// Brute-force extremal value of `kind` over unicyclic graphs of order `n`
/// and diameter `d` (`None` for any diameter).
pub fn extremal_record(
    n: usize,
    d: Option<usize>,
    kind: IndexKind,
    direction: Direction,
    tol: Tolerance,
) -> Result<ExtremalRecord> {
    UnicyclicClasses::new(n)?.extremal(d, kind, direction, tol)
}
