//! Grid checks of the two monotonicity lemmas.

use crate::index::{phi, power_pair_sum};

use super::report::{Status, VerificationReport};

/// `{1.01, 1.5, 2, ..., 50}`
pub fn phi_x_grid() -> Vec<f64> {
    std::iter::once(1.01)
        .chain((3..=100).map(|k| k as f64 * 0.5))
        .collect()
}

/// `{0.01, 0.5, 1, ..., 50}`
pub fn phi_y_grid() -> Vec<f64> {
    std::iter::once(0.01)
        .chain((1..=100).map(|k| k as f64 * 0.5))
        .collect()
}

pub const POWER_EXPONENTS: [f64; 4] = [1.0, 1.5, 2.0, 3.0];

/// Sample points per half-interval of `[0, a]`.
const POWER_STEPS: usize = 10;

fn violation_row(
    report: &mut VerificationReport,
    case: String,
    checked: usize,
    violations: &[String],
) {
    let observed = match violations.first() {
        None => format!("0 violations of {checked}"),
        Some(first) => format!(
            "{} violations of {checked}; first {first}",
            violations.len()
        ),
    };
    report.push(
        case,
        "0 violations",
        observed,
        Status::from_bool(violations.is_empty()),
    );
}

/// `phi` strictly increases along x and strictly decreases along y.
pub fn check_phi_grid() -> VerificationReport {
    let xs = phi_x_grid();
    let ys = phi_y_grid();
    let value = |x: f64, y: f64| phi(x, y).expect("grid lies inside the domain");
    let mut report = VerificationReport::new("lemma-phi");

    let mut checked = 0;
    let mut bad = Vec::new();
    for &y in &ys {
        for w in xs.windows(2) {
            checked += 1;
            if value(w[1], y) <= value(w[0], y) {
                bad.push(format!("y={y};x={}->{}", w[0], w[1]));
            }
        }
    }
    violation_row(&mut report, "increasing-in-x".into(), checked, &bad);

    let mut checked = 0;
    let mut bad = Vec::new();
    for &x in &xs {
        for w in ys.windows(2) {
            checked += 1;
            if value(x, w[1]) >= value(x, w[0]) {
                bad.push(format!("x={x};y={}->{}", w[0], w[1]));
            }
        }
    }
    violation_row(&mut report, "decreasing-in-y".into(), checked, &bad);
    report
}

/// `x^p + (a-x)^p` is non-increasing up to `a/2`, non-decreasing after it,
/// and symmetric about it, for integer `a` in `0..=10`.
pub fn check_power_sum_grid() -> VerificationReport {
    let mut report = VerificationReport::new("lemma-power-sum");
    for p in POWER_EXPONENTS {
        let mut checked = 0;
        let mut bad = Vec::new();
        for a in 0..=10 {
            let a = a as f64;
            let xs: Vec<f64> = (0..=2 * POWER_STEPS)
                .map(|k| a * k as f64 / (2 * POWER_STEPS) as f64)
                .collect();
            let f: Vec<f64> = xs.iter().map(|&x| power_pair_sum(a, p, x)).collect();
            let slack = 1e-12 * f.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for k in 0..2 * POWER_STEPS {
                checked += 1;
                let ok = if k < POWER_STEPS {
                    f[k + 1] <= f[k] + slack
                } else {
                    f[k + 1] >= f[k] - slack
                };
                if !ok {
                    bad.push(format!("a={a};x={}->{}", xs[k], xs[k + 1]));
                }
            }
            for (k, &x) in xs.iter().enumerate() {
                checked += 1;
                if (f[k] - power_pair_sum(a, p, a - x)).abs() > slack {
                    bad.push(format!("a={a};x={x};symmetry"));
                }
            }
        }
        violation_row(&mut report, format!("p={p}"), checked, &bad);
    }
    report
}
