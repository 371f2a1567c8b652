//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;

use sombor_core::verify::{
    check_inequality_catalog, check_maximizer_structure, check_phi_grid, check_power_sum_grid,
    inequality_catalog, to_csv, to_json, verify_max_theorem, verify_min, verify_small_diameter,
    Status, VerificationReport, MIN_SLACK,
};
use sombor_core::{
    build_u_n_d, closed_form, enumerate_unicyclic, enumerate_unicyclic_labeled, index_value,
    IndexKind, Tolerance,
};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn report_outcome(r: &VerificationReport) -> Outcome {
    let summary = format!(
        "{} rows, {} passed, {} skipped",
        r.rows.len(),
        r.count(Status::Pass),
        r.count(Status::Skipped)
    );
    match r.failures().next() {
        None if r.rows.is_empty() => Err("report has no rows".into()),
        None => Ok(summary),
        Some(row) => Err(format!(
            "{summary}; first failure {}: expected {}, observed {}",
            row.case, row.expected, row.observed
        )),
    }
}

fn max_sweep(kind: IndexKind) -> Outcome {
    let r = verify_max_theorem(6, 9, kind, Tolerance(TOL)).map_err(|e| e.to_string())?;
    // one row per (n, d) with 6 <= n <= 9 and 4 <= d <= n - 2
    let expected_rows: usize = (6..=9).map(|n| n - 5).sum();
    if r.rows.len() != expected_rows {
        return Err(format!("{} rows, expected {expected_rows}", r.rows.len()));
    }
    report_outcome(&r)
}

fn cycle_minimum() -> Outcome {
    let r = verify_min(5, 9, Tolerance(TOL)).map_err(|e| e.to_string())?;
    let first = &r.rows[0];
    if !first.observed.starts_with("value=14.1421356") {
        return Err(format!("n=5 minimum reported as {}", first.observed));
    }
    report_outcome(&r)
}

fn small_diameter() -> Outcome {
    let r = verify_small_diameter(5, 9, Tolerance(TOL)).map_err(|e| e.to_string())?;
    for n in 5..=9 {
        for case in [format!("n={n};d=2;max"), format!("n={n};second-max")] {
            if !r.rows.iter().any(|row| row.case == case) {
                return Err(format!("missing row {case}"));
            }
        }
        if n >= 6
            && !r
                .rows
                .iter()
                .any(|row| row.case == format!("n={n};d=3;max"))
        {
            return Err(format!("missing row n={n};d=3;max"));
        }
    }
    report_outcome(&r)
}

fn closed_form_agreement() -> Outcome {
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for n in 6..=200 {
        for d in 4..=n - 2 {
            let g = build_u_n_d(n, d).map_err(|e| e.to_string())?;
            for kind in IndexKind::ALL {
                let closed = closed_form(n, d, kind).map_err(|e| e.to_string())?;
                let direct = index_value(&g, kind);
                let gap = (closed - direct).abs();
                if gap >= TOL {
                    return Err(format!(
                        "n={n} d={d} {kind}: closed {closed}, edge sum {direct}"
                    ));
                }
                worst = worst.max(gap);
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (n, d, index) cases, largest gap {worst:.3e}"
    ))
}

fn catalog() -> Outcome {
    let entries = inequality_catalog();
    if entries.len() < 12 {
        return Err(format!("only {} entries", entries.len()));
    }
    let term_sets: Vec<BTreeSet<(i64, u64)>> = entries
        .iter()
        .map(|e| e.terms.iter().copied().collect())
        .collect();
    let required: [&[(i64, u64)]; 3] = [
        &[(1, 2), (-1, 10)],
        &[(1, 5), (1, 13), (-1, 10), (-1, 8)],
        &[(2, 2), (3, 13), (-6, 5), (-1, 17)],
    ];
    for req in required {
        let want: BTreeSet<(i64, u64)> = req.iter().copied().collect();
        if !term_sets.contains(&want) {
            return Err(format!("missing entry with terms {req:?}"));
        }
    }
    if let Some(e) = entries.iter().find(|e| e.value().abs() <= MIN_SLACK) {
        return Err(format!("{} has no slack: {}", e.id, e.value()));
    }
    report_outcome(&check_inequality_catalog())
}

fn lemma_grids() -> Outcome {
    let phi = check_phi_grid();
    let power = check_power_sum_grid();
    let a = report_outcome(&phi)?;
    let b = report_outcome(&power)?;
    Ok(format!("phi: {a}; power sum: {b}"))
}

fn oracle_equivalence() -> Outcome {
    let mut counts = Vec::new();
    for n in 3..=8 {
        let structured: BTreeSet<_> = enumerate_unicyclic(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(c, _)| c)
            .collect();
        let labeled = enumerate_unicyclic_labeled(n).map_err(|e| e.to_string())?;
        if structured != labeled {
            return Err(format!(
                "n={n}: structured {} classes, labeled {}",
                structured.len(),
                labeled.len()
            ));
        }
        counts.push(structured.len());
    }
    if counts[1] != 2 || counts[2] != 5 {
        return Err(format!(
            "class counts for n=4, 5 are {}, {}",
            counts[1], counts[2]
        ));
    }
    Ok(format!("class counts for n=3..=8: {counts:?}"))
}

fn maximizer_structure() -> Outcome {
    let mut cases = 0;
    let mut path_rows_skipped = 0;
    for n in 7..=9 {
        for d in 4..=n - 3 {
            let r = check_maximizer_structure(n, d, Tolerance(TOL)).map_err(|e| e.to_string())?;
            report_outcome(&r).map_err(|e| format!("n={n} d={d}: {e}"))?;
            for name in ["removable-pendant", "branching-neighbor"] {
                let row = r
                    .rows
                    .iter()
                    .find(|row| row.case.contains(name))
                    .ok_or_else(|| format!("n={n} d={d}: no {name} row"))?;
                if row.status != Status::Pass {
                    return Err(format!("n={n} d={d}: {name} is {:?}", row.status));
                }
            }
            path_rows_skipped += r
                .rows
                .iter()
                .filter(|row| {
                    row.case.contains("cycle-meets-path") && row.status == Status::Skipped
                })
                .count();
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} (n, d) cases; cycle/path rows without a qualifying path: {path_rows_skipped}"
    ))
}

fn determinism() -> Outcome {
    let run = |threads: usize| -> Result<(String, String), String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| {
            let r = verify_max_theorem(6, 9, IndexKind::Sombor, Tolerance(TOL))
                .map_err(|e| e.to_string())?;
            let reports = [r];
            Ok((to_csv(&reports), to_json(&reports)))
        })
    };
    let single = run(1)?;
    let multi = run(4)?;
    if single.0 != multi.0 {
        return Err("CSV differs between 1 and 4 workers".into());
    }
    if single.1 != multi.1 {
        return Err("JSON differs between 1 and 4 workers".into());
    }
    Ok(format!(
        "1 vs 4 workers: {} identical CSV bytes",
        single.0.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("max-theorem(so) over 6 <= n <= 9", || {
            max_sweep(IndexKind::Sombor)
        }),
        ("max-theorem(sored) over 6 <= n <= 9", || {
            max_sweep(IndexKind::ReducedSombor)
        }),
        ("cycle minimum over 5 <= n <= 9", cycle_minimum),
        ("small-diameter maximizers over 5 <= n <= 9", small_diameter),
        (
            "closed form vs edge sum over 6 <= n <= 200",
            closed_form_agreement,
        ),
        ("inequality catalog signs and slack", catalog),
        ("monotonicity lemma grids", lemma_grids),
        (
            "structured vs labeled enumeration for 3 <= n <= 8",
            oracle_equivalence,
        ),
        ("maximizer structure for 7 <= n <= 9", maximizer_structure),
        ("report determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {reason}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
