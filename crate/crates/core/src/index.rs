//! Sombor-type indices, the two monotonicity helpers used by the extremal
//! arguments, and closed forms for the extremal family `U_n^d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute tolerance for comparing index values.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Edge-weight function selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IndexKind {
    /// `sqrt(du^2 + dv^2)`
    Sombor,
    /// `sqrt((du-1)^2 + (dv-1)^2)`
    ReducedSombor,
}

impl IndexKind {
    pub const ALL: [IndexKind; 2] = [IndexKind::Sombor, IndexKind::ReducedSombor];

    /// Short name used on the command line and in reports.
    pub fn code(self) -> &'static str {
        match self {
            IndexKind::Sombor => "so",
            IndexKind::ReducedSombor => "sored",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "so" | "sombor" => Ok(IndexKind::Sombor),
            "sored" | "reduced" | "reduced-sombor" => Ok(IndexKind::ReducedSombor),
            _ => Err(Error::input(format!(
                "unknown index `{s}` (expected so|sored)"
            ))),
        }
    }
}

/// Tolerance-aware comparison of index values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_TOLERANCE)
    }
}

impl Tolerance {
    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }

    /// `a` is smaller than `b` by more than the tolerance.
    pub fn lt(self, a: f64, b: f64) -> bool {
        a < b - self.0
    }
}

/// Weight contributed by an edge whose endpoints have degrees `du` and `dv`.
pub fn edge_weight(kind: IndexKind, du: usize, dv: usize) -> Result<f64> {
    if du < 1 || dv < 1 {
        return Err(Error::input(format!(
            "edge weights need degrees >= 1, got ({du}, {dv})"
        )));
    }
    Ok(weight(kind, du, dv))
}

fn weight(kind: IndexKind, du: usize, dv: usize) -> f64 {
    let (a, b) = match kind {
        IndexKind::Sombor => (du as f64, dv as f64),
        IndexKind::ReducedSombor => ((du - 1) as f64, (dv - 1) as f64),
    };
    a.hypot(b)
}

/// Sum of edge weights over all edges of `g`.
pub fn index_value(g: &Graph, kind: IndexKind) -> f64 {
    // Neumaier summation keeps the long pendant runs of large graphs exact
    // to well below the comparison tolerance.
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for &(u, v) in g.edges() {
        let w = weight(kind, g.degree(u), g.degree(v));
        let t = sum + w;
        if sum.abs() >= w.abs() {
            carry += (sum - t) + w;
        } else {
            carry += (w - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// `sqrt(x^2 + y^2) - sqrt((x-1)^2 + y^2)`, for `x > 1`, `y > 0`.
pub fn phi(x: f64, y: f64) -> Result<f64> {
    if !(x > 1.0 && y > 0.0) {
        return Err(Error::input(format!(
            "phi needs x > 1 and y > 0, got ({x}, {y})"
        )));
    }
    Ok(x.hypot(y) - (x - 1.0).hypot(y))
}

/// `x^p + (a - x)^p`. Real-valued for `0 <= x <= a`, or any `x` when `p` is
/// an integer.
pub fn power_pair_sum(a: f64, p: f64, x: f64) -> f64 {
    x.powf(p) + (a - x).powf(p)
}

fn check_family_range(n: usize, d: usize) -> Result<()> {
    if d < 4 || d + 2 > n {
        return Err(Error::input(format!(
            "the extremal family needs 4 <= d <= n - 2, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

/// Closed form of `SO(U_n^d)`.
pub fn closed_form_sombor(n: usize, d: usize) -> Result<f64> {
    check_family_range(n, d)?;
    let s = (n - d + 1) as f64;
    let tail = if d == 4 {
        2.0 * 13f64.sqrt() + 10f64.sqrt()
    } else {
        2.0 * 2f64.sqrt() * (d - 5) as f64 + 3.0 * 13f64.sqrt() + 5f64.sqrt()
    };
    Ok((n - d - 1) as f64 * (s * s + 1.0).sqrt() + 2.0 * (s * s + 4.0).sqrt() + tail)
}

/// Closed form of `SO_red(U_n^d)`.
pub fn closed_form_reduced(n: usize, d: usize) -> Result<f64> {
    check_family_range(n, d)?;
    let s = (n - d) as f64;
    let tail = if d == 4 {
        2.0 * 5f64.sqrt() + 2.0
    } else {
        2f64.sqrt() * (d - 5) as f64 + 3.0 * 5f64.sqrt() + 1.0
    };
    Ok((n - d - 1) as f64 * s + 2.0 * (s * s + 1.0).sqrt() + tail)
}

pub fn closed_form(n: usize, d: usize, kind: IndexKind) -> Result<f64> {
    match kind {
        IndexKind::Sombor => closed_form_sombor(n, d),
        IndexKind::ReducedSombor => closed_form_reduced(n, d),
    }
}
