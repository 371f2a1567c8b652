//! Constant radical inequalities from the extremal arguments.
//!
//! Each entry is `Σ c_i sqrt(r_i)` with integer coefficients and radicands,
//! transcribed as displayed, together with the sign the argument claims.
//! Ids name the argument and the case they close.

use super::report::{fmt_value, Status, VerificationReport};

/// Entries must clear zero by at least this much.
pub const MIN_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Positive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofInequality {
    pub id: &'static str,
    /// `(coefficient, radicand)` pairs.
    pub terms: Vec<(i64, u64)>,
    pub claimed: Sign,
}

impl ProofInequality {
    fn negative(id: &'static str, terms: &[(i64, u64)]) -> Self {
        ProofInequality {
            id,
            terms: terms.to_vec(),
            claimed: Sign::Negative,
        }
    }

    pub fn value(&self) -> f64 {
        self.terms
            .iter()
            .map(|&(c, r)| c as f64 * (r as f64).sqrt())
            .sum()
    }

    /// Human-readable form, e.g. `2√8 - √10 - √18`.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (k, &(c, r)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("√{r}"));
        }
        out
    }

    pub fn holds(&self) -> bool {
        let v = self.value();
        match self.claimed {
            Sign::Negative => v < -MIN_SLACK,
            Sign::Positive => v > MIN_SLACK,
        }
    }
}

/// Every constant inequality used to close a case.
pub fn inequality_catalog() -> Vec<ProofInequality> {
    use ProofInequality as P;
    vec![
        // n = d + 2: triangle at an end of the diametral path, moved inward
        P::negative("base-case/triangle-at-end", &[(2, 8), (-1, 10), (-1, 18)]),
        P::negative("base-case/square-at-end", &[(1, 2), (-1, 10)]),
        // n = d + 2: 4-cycle away from the second path vertex
        P::negative(
            "base-case/square-off-end",
            &[(1, 13), (1, 5), (-1, 10), (-1, 8)],
        ),
        // cycle disjoint from the diametral path: constant tails
        P::negative(
            "cycle-meets-path/hanging-cycle-k1-tail",
            &[(1, 18), (2, 13), (-2, 29), (-1, 26)],
        ),
        P::negative(
            "cycle-meets-path/hanging-cycle-k2-tail",
            &[(2, 13), (-1, 25), (-1, 17)],
        ),
        P::negative(
            "cycle-meets-path/hanging-cycle-k3-tail",
            &[(1, 13), (-1, 20)],
        ),
        // cycle touching the path in one vertex
        P::negative(
            "cycle-meets-path/touching-triangle-bound",
            &[(2, 2), (-1, 13), (2, 5), (-1, 17)],
        ),
        P::negative(
            "cycle-meets-path/touching-long-cycle-tail",
            &[(2, 20), (-2, 29), (1, 8), (-1, 26)],
        ),
        // only the two path ends are pendant
        P::negative(
            "removable-pendant/parallel-arcs-leaf-neighbor",
            &[(1, 10), (-1, 5), (4, 2), (2, 13), (-6, 5), (-1, 17)],
        ),
        P::negative(
            "removable-pendant/parallel-arcs-bound",
            &[(2, 2), (3, 13), (-6, 5), (-1, 17)],
        ),
        P::negative(
            "removable-pendant/longer-arc-bound",
            &[(2, 2), (1, 13), (-2, 5), (-1, 17)],
        ),
        // a removable pendant whose neighbor branches
        P::negative(
            "branching-neighbor/parallel-arcs-bound",
            &[(3, 13), (-4, 5), (-1, 17)],
        ),
        P::negative(
            "branching-neighbor/longer-arc-tail",
            &[(1, 13), (1, 8), (-1, 20), (-1, 17)],
        ),
        P::negative(
            "branching-neighbor/end-triangle-bound",
            &[(1, 13), (2, 2), (-1, 10), (-3, 2)],
        ),
        P::negative(
            "branching-neighbor/end-square",
            &[(2, 8), (-1, 18), (-1, 10)],
        ),
        P::negative(
            "branching-neighbor/far-triangle-bound",
            &[(1, 2), (3, 10), (1, 13), (-2, 17), (-5, 5)],
        ),
        P::negative(
            "branching-neighbor/square-at-third-vertex-bound",
            &[(1, 13), (-1, 20), (1, 10), (-1, 5), (2, 10), (-2, 17)],
        ),
        P::negative(
            "branching-neighbor/square-further-in-bound",
            &[(1, 13), (-2, 20), (2, 13), (-2, 2), (1, 10), (-1, 5)],
        ),
    ]
}

/// Evaluates every catalog entry and checks its sign with slack.
pub fn check_inequality_catalog() -> VerificationReport {
    let mut report = VerificationReport::new("inequality-catalog");
    for entry in inequality_catalog() {
        let expected = match entry.claimed {
            Sign::Negative => "< 0",
            Sign::Positive => "> 0",
        };
        report.push(
            entry.id,
            format!("{} {expected}", entry.expression()),
            fmt_value(entry.value()),
            Status::from_bool(entry.holds()),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(id: &str) -> ProofInequality {
        inequality_catalog()
            .into_iter()
            .find(|e| e.id == id)
            .unwrap()
    }

    #[test]
    fn representative_values() {
        let v = find("base-case/square-at-end").value();
        assert!((v - (2f64.sqrt() - 10f64.sqrt())).abs() < 1e-15);
        assert!((v + 1.7480641).abs() < 1e-7);
        // 2√8 - √10 - √18 is the same number
        assert!((find("base-case/triangle-at-end").value() - v).abs() < 1e-12);
        assert!((find("base-case/square-off-end").value() + 0.1490855).abs() < 1e-7);
        assert!((find("removable-pendant/parallel-arcs-bound").value() + 3.8944325).abs() < 1e-7);
        // the tightest entry
        let tight = 3.0 * 13f64.sqrt() - 2.0 * 20f64.sqrt() - 2.0 * 2f64.sqrt() + 10f64.sqrt()
            - 5f64.sqrt();
        assert!((find("branching-neighbor/square-further-in-bound").value() - tight).abs() < 1e-12);
        assert!(tight < -0.0298 && tight > -0.0299);
    }

    #[test]
    fn catalog_is_large_and_has_slack() {
        let cat = inequality_catalog();
        assert!(cat.len() >= 12);
        assert!(cat.iter().all(|e| e.value().abs() > MIN_SLACK));
        let mut ids: Vec<_> = cat.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cat.len());
        assert!(check_inequality_catalog().pass());
    }

    #[test]
    fn sign_mismatch_is_reported() {
        let wrong = ProofInequality {
            id: "flipped",
            terms: vec![(1, 10), (-1, 2)],
            claimed: Sign::Negative,
        };
        assert!(!wrong.holds());
        let tiny = ProofInequality {
            id: "zero",
            terms: vec![(2, 2), (-1, 8)],
            claimed: Sign::Negative,
        };
        assert!(!tiny.holds());
    }

    #[test]
    fn expression_rendering() {
        assert_eq!(
            find("base-case/triangle-at-end").expression(),
            "2√8 - √10 - √18"
        );
    }
}
