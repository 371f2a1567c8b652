//! Degree-parameterized index differences `SO(G*) - SO(G**)` from the proof
//! transformations, checked for the claimed strict sign on integer grids.

use crate::error::{Error, Result};

use super::report::{fmt_value, Status, VerificationReport};

pub const DEFAULT_GRID_MAX_DEGREE: u32 = 12;

fn h(p: u32, q: u32) -> f64 {
    (p as f64).hypot(q as f64)
}

/// The degree vectors a step is evaluated on.
#[derive(Debug, Clone, Copy)]
pub enum Domain {
    /// One variable per named degree, each in `[lower, upper.unwrap_or(grid)]`,
    /// filtered by `admissible`.
    Box {
        lower: &'static [u32],
        upper: &'static [Option<u32>],
        admissible: fn(&[u32], u32) -> bool,
    },
    /// `[t, d(v), x_1, .., x_t]` with `t >= 1`, `d(v) >= 2`, `d(v) + t <= grid`
    /// and `1 <= x_1 <= .. <= x_t <= grid` (the sum is symmetric in the x's).
    BranchShift,
}

#[derive(Debug, Clone, Copy)]
pub struct DeltaStep {
    pub id: &'static str,
    pub variables: &'static str,
    pub domain: Domain,
    pub eval: fn(&[u32]) -> f64,
}

fn any(_: &[u32], _: u32) -> bool {
    true
}

fn grow_second(a: &[u32], grid: u32) -> bool {
    a[1] < grid
}

fn grow_first(a: &[u32], grid: u32) -> bool {
    a[0] < grid
}

/// `(x-1)(sqrt(x²+1) - sqrt((x+1)²+1))`: pendants of a vertex whose degree
/// goes from x to x + 1.
fn pendant_run(x: u32) -> f64 {
    (x - 1) as f64 * (h(x, 1) - h(x + 1, 1))
}

/// Every parameterized step whose sign the arguments rely on.
pub fn delta_steps() -> Vec<DeltaStep> {
    vec![
        DeltaStep {
            id: "base-case/triangle-moved-inward",
            variables: "d(u[i-2])",
            domain: Domain::Box {
                lower: &[1],
                upper: &[Some(2)],
                admissible: any,
            },
            eval: |a| h(a[0], 2) - h(a[0], 3) + h(3, 3) - h(2, 3),
        },
        DeltaStep {
            id: "cycle-meets-path/hanging-cycle-k1",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[2, 2],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 3) - h(a[0], 5)) + (h(a[1], 3) - h(a[1], 5)) + h(3, 3) + 2.0 * h(3, 2)
                    - 2.0 * h(2, 5)
                    - h(1, 5)
            },
        },
        DeltaStep {
            id: "cycle-meets-path/hanging-cycle-k2",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[2, 2],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 3) - h(a[0], 4)) + (h(a[1], 3) - h(a[1], 4)) + 2.0 * h(2, 3)
                    - h(3, 4)
                    - h(1, 4)
            },
        },
        DeltaStep {
            id: "cycle-meets-path/hanging-cycle-k3",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[2, 2],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| (h(a[0], 3) - h(a[0], 4)) + (h(a[1], 3) - h(a[1], 4)) + h(2, 3) - h(2, 4),
        },
        DeltaStep {
            id: "cycle-meets-path/touching-triangle",
            variables: "d(u[i]),d(u[i+1]),d(u[i+2])",
            domain: Domain::Box {
                lower: &[4, 2, 1],
                upper: &[None, None, None],
                admissible: grow_second,
            },
            eval: |a| {
                let (x, y, z) = (a[0], a[1], a[2]);
                h(2, 2) - h(y + 1, 2) + h(x, 2) - h(x, 1) + h(x, y) - h(x, y + 1) + h(y, z)
                    - h(y + 1, z)
            },
        },
        DeltaStep {
            id: "cycle-meets-path/touching-long-cycle",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[1, 1],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 4) - h(a[0], 5)) + (h(a[1], 4) - h(a[1], 5)) + 2.0 * h(2, 4)
                    - 2.0 * h(2, 5)
                    + h(2, 2)
                    - h(1, 5)
            },
        },
        DeltaStep {
            id: "removable-pendant/parallel-arcs",
            variables: "d(u[i-1])",
            domain: Domain::Box {
                lower: &[1],
                upper: &[None],
                admissible: any,
            },
            eval: |a| {
                h(a[0], 3) - h(a[0], 2) + 2.0 * h(2, 2) + 2.0 * h(2, 3) - 3.0 * h(2, 4) - h(1, 4)
            },
        },
        DeltaStep {
            id: "removable-pendant/longer-arc",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[1, 1],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 3) - h(a[0], 4)) + (h(a[1], 3) - h(a[1], 4)) + h(2, 2) + h(2, 3)
                    - h(2, 4)
                    - h(1, 4)
            },
        },
        DeltaStep {
            id: "branching-neighbor/merge-branch-into-leaf-neighbor",
            variables: "t,d(v),d(x[1..t])",
            domain: Domain::BranchShift,
            eval: |a| {
                let (t, dv) = (a[0], a[1]);
                let moved: f64 = a[2..].iter().map(|&x| h(t + 1, x) - h(dv + t, x)).sum();
                moved + (dv - 1) as f64 * (h(dv, 1) - h(dv + t, 1)) + (h(t + 1, dv) - h(dv + t, 1))
            },
        },
        DeltaStep {
            id: "branching-neighbor/parallel-arcs",
            variables: "d(u[i+2]),d(u[i-1])",
            domain: Domain::Box {
                lower: &[1, 1],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 2) - h(a[0], 4)) + (h(a[1], 3) - h(a[1], 2)) + 2.0 * h(2, 3) + h(2, 2)
                    - 2.0 * h(2, 4)
                    - h(1, 4)
            },
        },
        DeltaStep {
            id: "branching-neighbor/longer-arc",
            variables: "d(u[i-1]),d(u[i+1])",
            domain: Domain::Box {
                lower: &[1, 1],
                upper: &[None, None],
                admissible: any,
            },
            eval: |a| {
                (h(a[0], 3) - h(a[0], 4)) + (h(a[1], 3) - h(a[1], 4)) + h(2, 3) + h(2, 2)
                    - h(2, 4)
                    - h(1, 4)
            },
        },
        DeltaStep {
            id: "branching-neighbor/end-triangle",
            variables: "d(u[d-2])",
            domain: Domain::Box {
                lower: &[2],
                upper: &[None],
                admissible: any,
            },
            eval: |a| {
                h(a[0], 2) - h(a[0], 3) + 2.0 * h(2, 3) + h(2, 2) - h(1, 3) - h(2, 3) - h(3, 3)
            },
        },
        DeltaStep {
            id: "branching-neighbor/triangle-at-third-vertex",
            variables: "d(u[2])",
            domain: Domain::Box {
                lower: &[3],
                upper: &[None],
                admissible: grow_first,
            },
            eval: |a| {
                let x = a[0];
                pendant_run(x) + h(x, 3) - 2.0 * h(x + 1, 2) + h(3, 3)
            },
        },
        DeltaStep {
            id: "branching-neighbor/far-triangle",
            variables: "d(u[2]),d(u[i+2])",
            domain: Domain::Box {
                lower: &[3, 1],
                upper: &[None, None],
                admissible: grow_first,
            },
            eval: |a| {
                let (x, y) = (a[0], a[1]);
                pendant_run(x) + h(x, 2) + h(y, 3) + h(3, 3) - 2.0 * h(x + 1, 2) - h(y, 2) + h(2, 3)
                    - h(2, 2)
            },
        },
        DeltaStep {
            id: "branching-neighbor/square-at-third-vertex",
            variables: "d(u[2]),d(u[6])",
            domain: Domain::Box {
                lower: &[3, 1],
                upper: &[None, None],
                admissible: grow_first,
            },
            eval: |a| {
                let (x, y) = (a[0], a[1]);
                pendant_run(x) + h(x, 3) + h(y, 3) - h(y, 2) - 2.0 * h(x + 1, 2) + h(2, 3)
            },
        },
        DeltaStep {
            id: "branching-neighbor/square-further-in",
            variables: "d(u[2]),d(u[i+3])",
            domain: Domain::Box {
                lower: &[3, 1],
                upper: &[None, None],
                admissible: grow_first,
            },
            eval: |a| {
                let (x, y) = (a[0], a[1]);
                pendant_run(x) - 2.0 * h(x + 1, 2) + h(x, 2) + 2.0 * h(2, 3) - h(2, 2) + h(y, 3)
                    - h(y, 2)
            },
        },
    ]
}

impl DeltaStep {
    /// Calls `visit` on every admissible degree vector.
    pub fn for_each_point(&self, grid: u32, visit: &mut dyn FnMut(&[u32])) {
        match self.domain {
            Domain::Box {
                lower,
                upper,
                admissible,
            } => {
                let hi: Vec<u32> = upper.iter().map(|u| u.unwrap_or(grid)).collect();
                let mut point = lower.to_vec();
                if point.iter().zip(&hi).any(|(p, h)| p > h) {
                    return;
                }
                loop {
                    if admissible(&point, grid) {
                        visit(&point);
                    }
                    let mut k = 0;
                    loop {
                        if k == point.len() {
                            return;
                        }
                        if point[k] < hi[k] {
                            point[k] += 1;
                            break;
                        }
                        point[k] = lower[k];
                        k += 1;
                    }
                }
            }
            Domain::BranchShift => {
                for t in 1..grid {
                    for dv in 2..=grid.saturating_sub(t) {
                        let mut point = vec![t, dv];
                        multisets(t as usize, 1, grid, &mut point, visit);
                    }
                }
            }
        }
    }
}

fn multisets(
    left: usize,
    from: u32,
    grid: u32,
    point: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if left == 0 {
        visit(point);
        return;
    }
    for x in from..=grid {
        point.push(x);
        multisets(left - 1, x, grid, point, visit);
        point.pop();
    }
}

/// Each step is negative at every admissible grid point.
pub fn check_transformation_deltas(grid_max_degree: u32) -> Result<VerificationReport> {
    if grid_max_degree < 5 {
        return Err(Error::Input(format!(
            "the degree grid must reach at least 5, got {grid_max_degree}"
        )));
    }
    Ok(check_steps(&delta_steps(), grid_max_degree))
}

fn check_steps(steps: &[DeltaStep], grid_max_degree: u32) -> VerificationReport {
    let mut report = VerificationReport::new("transformation-deltas");
    for step in steps {
        let mut points = 0usize;
        let mut worst = f64::NEG_INFINITY;
        let mut violation: Option<(Vec<u32>, f64)> = None;
        step.for_each_point(grid_max_degree, &mut |p| {
            points += 1;
            let v = (step.eval)(p);
            worst = worst.max(v);
            if v >= 0.0 && violation.is_none() {
                violation = Some((p.to_vec(), v));
            }
        });
        let observed = match &violation {
            Some((p, v)) => format!(
                "violated at {}=({}): {}",
                step.variables,
                p.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                fmt_value(*v)
            ),
            None if points == 0 => "no admissible points".to_string(),
            None => format!("max={} over {points} points", fmt_value(worst)),
        };
        report.push(
            step.id,
            format!("< 0 for degrees <= {grid_max_degree}"),
            observed,
            Status::from_bool(violation.is_none() && points > 0),
        );
    }
    report
}
