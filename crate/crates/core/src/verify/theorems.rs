//! Brute-force checks of the extremal statements: the diameter-constrained
//! maxima, the cycle minimum, and the small-diameter maximizers.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_certificate, Certificate};
use crate::construct::{build_cycle, build_u_abc, build_u_n_d};
use crate::enumerate::{Direction, UnicyclicClasses, MAX_STRUCTURED_ORDER};
use crate::error::{Error, Result};
use crate::index::{closed_form, index_value, IndexKind, Tolerance};

use super::report::{fmt_value, Status, VerificationReport};

fn check_range(n_lo: usize, n_hi: usize, min_n: usize, what: &str) -> Result<()> {
    if n_lo > n_hi || n_hi < min_n {
        return Err(Error::Input(format!(
            "{what} needs an order range reaching n >= {min_n}, got {n_lo}..={n_hi}"
        )));
    }
    if n_hi > MAX_STRUCTURED_ORDER {
        return Err(Error::Capability(format!(
            "enumeration is limited to n <= {MAX_STRUCTURED_ORDER}, got {n_hi}"
        )));
    }
    Ok(())
}

/// Classes for every order in `n_lo..=n_hi`, in order.
fn classes_for(n_lo: usize, n_hi: usize) -> Result<Vec<UnicyclicClasses>> {
    (n_lo..=n_hi)
        .into_par_iter()
        .map(UnicyclicClasses::new)
        .collect()
}

fn join_certs<'a>(certs: impl IntoIterator<Item = &'a Certificate>) -> String {
    certs
        .into_iter()
        .map(Certificate::to_hex)
        .collect::<Vec<_>>()
        .join("|")
}

/// For each `n` in range and each `4 <= d <= n - 2`, the brute-force maximum
/// of `kind` equals the closed form and is attained by `U_n^d` alone.
pub fn verify_max_theorem(
    n_lo: usize,
    n_hi: usize,
    kind: IndexKind,
    tol: Tolerance,
) -> Result<VerificationReport> {
    check_range(n_lo, n_hi, 6, "the diameter-constrained maximum")?;
    let n_lo = n_lo.max(6);
    let all = classes_for(n_lo, n_hi)?;
    let cases: Vec<(&UnicyclicClasses, usize)> = all
        .iter()
        .flat_map(|c| (4..=c.n - 2).map(move |d| (c, d)))
        .collect();

    let rows = cases
        .par_iter()
        .map(|&(classes, d)| -> Result<_> {
            let n = classes.n;
            let record = classes.extremal(Some(d), kind, Direction::Max, tol)?;
            let expected_value = closed_form(n, d, kind)?;
            let expected_cert = canonical_certificate(&build_u_n_d(n, d)?)?;
            let ok = tol.eq(record.value, expected_value)
                && record.optima.len() == 1
                && record.optima.contains(&expected_cert);
            Ok((
                format!("n={n};d={d}"),
                format!(
                    "value={};optimum={}",
                    fmt_value(expected_value),
                    expected_cert
                ),
                format!(
                    "value={};optima={};searched={}",
                    fmt_value(record.value),
                    join_certs(&record.optima),
                    record.count_searched
                ),
                Status::from_bool(ok),
            ))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport::new(format!("max-theorem({kind})"));
    for (case, expected, observed, status) in rows {
        report.push(case, expected, observed, status);
    }
    Ok(report)
}

/// For each `n` in range (`n >= 5`), the minimum Sombor index over all
/// unicyclic classes is `2 sqrt(2) n`, attained only by the cycle.
pub fn verify_min(n_lo: usize, n_hi: usize, tol: Tolerance) -> Result<VerificationReport> {
    if n_lo < 5 {
        return Err(Error::Input(format!(
            "the cycle minimum is stated for n >= 5, got n_lo = {n_lo}"
        )));
    }
    check_range(n_lo, n_hi, 5, "the cycle minimum")?;
    let all = classes_for(n_lo, n_hi)?;
    let mut report = VerificationReport::new("min-cycle(so)");
    for classes in &all {
        let n = classes.n;
        let record = classes.extremal(None, IndexKind::Sombor, Direction::Min, tol)?;
        let expected_value = 2.0 * 2f64.sqrt() * n as f64;
        let cycle = canonical_certificate(&build_cycle(n)?)?;
        let ok = tol.eq(record.value, expected_value) && record.unique_optimum() == Some(&cycle);
        report.push(
            format!("n={n}"),
            format!("value={};optimum={cycle}", fmt_value(expected_value)),
            format!(
                "value={};optima={}",
                fmt_value(record.value),
                join_certs(&record.optima)
            ),
            Status::from_bool(ok),
        );
    }
    Ok(report)
}

/// Small-diameter maximizers and the runner-up over all unicyclic graphs:
///
/// * diameter 1: `C_3` (only for `n = 3`);
/// * diameter 2: `U(n; n-3, 0, 0)`;
/// * diameter 3: `U(n; n-4, 1, 0)`;
/// * second largest value overall: `U(n; n-4, 1, 0)`.
pub fn verify_small_diameter(
    n_lo: usize,
    n_hi: usize,
    tol: Tolerance,
) -> Result<VerificationReport> {
    if n_lo < 3 {
        return Err(Error::Input(format!(
            "unicyclic graphs need n >= 3, got {n_lo}"
        )));
    }
    check_range(n_lo, n_hi, 3, "the small-diameter maximizers")?;
    let all = classes_for(n_lo, n_hi)?;
    let mut report = VerificationReport::new("small-diameter(so)");
    for classes in &all {
        let n = classes.n;
        let mut targets: Vec<(usize, Certificate)> = Vec::new();
        if n == 3 {
            targets.push((1, canonical_certificate(&build_cycle(3)?)?));
        }
        if n >= 4 {
            targets.push((2, canonical_certificate(&build_u_abc(n, n - 3, 0, 0)?)?));
        }
        if n >= 5 {
            targets.push((3, canonical_certificate(&build_u_abc(n, n - 4, 1, 0)?)?));
        }
        for (d, expected) in targets {
            let record = classes.extremal(Some(d), IndexKind::Sombor, Direction::Max, tol)?;
            let ok = record.unique_optimum() == Some(&expected);
            report.push(
                format!("n={n};d={d};max"),
                format!("optimum={expected}"),
                format!(
                    "value={};optima={}",
                    fmt_value(record.value),
                    join_certs(&record.optima)
                ),
                Status::from_bool(ok),
            );
        }
        if n >= 5 {
            let expected = canonical_certificate(&build_u_abc(n, n - 4, 1, 0)?)?;
            let (value, second) = second_level(classes, tol);
            let ok = second.len() == 1 && second.contains(&expected);
            report.push(
                format!("n={n};second-max"),
                format!("optimum={expected}"),
                format!(
                    "value={};optima={}",
                    value.map_or_else(|| "-".into(), fmt_value),
                    join_certs(&second)
                ),
                Status::from_bool(ok),
            );
        }
    }
    Ok(report)
}

/// Classes at the second distinct Sombor value from the top.
fn second_level(
    classes: &UnicyclicClasses,
    tol: Tolerance,
) -> (Option<f64>, BTreeSet<Certificate>) {
    let mut scored: Vec<(f64, &Certificate)> = classes
        .classes
        .iter()
        .map(|c| (index_value(&c.graph, IndexKind::Sombor), &c.certificate))
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    let Some(&(top, _)) = scored.first() else {
        return (None, BTreeSet::new());
    };
    let Some(&(second, _)) = scored.iter().find(|(v, _)| tol.lt(*v, top)) else {
        return (None, BTreeSet::new());
    };
    let level = scored
        .iter()
        .filter(|(v, _)| tol.eq(*v, second))
        .map(|(_, c)| (*c).clone())
        .collect();
    (Some(second), level)
}
