//! Canonical certificates for small graphs.
//!
//! The certificate is the vertex count followed by the upper-triangular
//! adjacency bitstring (row-major, MSB first) of the relabeling that makes
//! that bitstring lexicographically smallest. Candidate relabelings are the
//! leaves of an individualization search over the degree partition, refined
//! to an equitable partition at each node. The candidate set is defined
//! without reference to input labels, so the minimum over it is invariant.
//! Interchangeable twins (equal open neighborhoods) are branched on once.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_certificate`].
pub const MAX_CERTIFICATE_ORDER: usize = 12;

/// Byte string identifying an isomorphism class. Ordering is bytewise, which
/// for equal orders coincides with ordering of the adjacency bitstrings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes =
            hex::decode(s).map_err(|e| Error::input(format!("bad certificate hex: {e}")))?;
        let cert = Certificate(bytes);
        let n = cert.order();
        if cert.0.len() != 1 + pair_count(n).div_ceil(8) {
            return Err(Error::input("certificate length does not match its order"));
        }
        Ok(cert)
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let bits = &self.0[1..];
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k / 8] & (0x80 >> (k % 8)) != 0 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("certificate bits index valid vertex pairs")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Computes the canonical certificate of `g`.
pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    let n = g.order();
    if n > MAX_CERTIFICATE_ORDER {
        return Err(Error::capability(format!(
            "canonical certificates are limited to {MAX_CERTIFICATE_ORDER} vertices, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let search = Search { g, adj: &adj };
    let colors = search.refine(g.degrees());
    let mut best: Option<u128> = None;
    search.descend(colors, &mut best);
    let bits = best.unwrap_or(0);

    let len = pair_count(n);
    let mut bytes = vec![0u8; 1 + len.div_ceil(8)];
    bytes[0] = n as u8;
    for k in 0..len {
        if bits >> (len - 1 - k) & 1 == 1 {
            bytes[1 + k / 8] |= 0x80 >> (k % 8);
        }
    }
    Ok(Certificate(bytes))
}

struct Search<'a> {
    g: &'a Graph,
    adj: &'a [u32],
}

impl Search<'_> {
    /// Color refinement to the coarsest equitable partition finer than
    /// `colors`. New colors are ranks of (old color, sorted neighbor colors),
    /// so they depend only on the structure, never on labels.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = colors.len();
        let mut classes = count_classes(&colors);
        loop {
            let signatures: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> =
                        self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let mut distinct = signatures.clone();
            distinct.sort();
            distinct.dedup();
            colors = signatures
                .iter()
                .map(|s| distinct.binary_search(s).expect("signature present"))
                .collect();
            let next = distinct.len();
            if next == classes {
                return colors;
            }
            classes = next;
        }
    }

    fn descend(&self, colors: Vec<usize>, best: &mut Option<u128>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1);
        let Some(target) = target else {
            let bits = self.bitstring(&colors);
            if best.is_none_or(|b| bits < b) {
                *best = Some(bits);
            }
            return;
        };

        let mut tried: Vec<u32> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            // Twins in the target cell are swapped by an automorphism that
            // fixes everything individualized so far.
            if tried.contains(&self.adj[v]) {
                continue;
            }
            tried.push(self.adj[v]);
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| match (c == target, x == v) {
                    (true, true) => 2 * c,
                    (true, false) => 2 * c + 1,
                    _ => 2 * c,
                })
                .collect();
            let split = self.refine(compress(split));
            self.descend(split, best);
        }
    }

    /// Row-major upper-triangular adjacency under the discrete coloring,
    /// where the vertex with color `p` sits at position `p`.
    fn bitstring(&self, colors: &[usize]) -> u128 {
        let n = colors.len();
        let mut at = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            at[c] = v;
        }
        let mut bits = 0u128;
        for i in 0..n {
            let row = self.adj[at[i]];
            for &vj in &at[i + 1..] {
                bits = (bits << 1) | u128::from(row >> vj & 1);
            }
        }
        bits
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Renumbers colors to consecutive ranks, preserving their order.
fn compress(colors: Vec<usize>) -> Vec<usize> {
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).expect("color present"))
        .collect()
}
