//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a verification row fails,
//! 2 for usage errors and for inputs the library rejects.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construct::{build_cycle, build_u_abc, build_u_n_d};
use crate::enumerate::{Direction, ExtremalRecord, UnicyclicClasses};
use crate::error::Error;
use crate::graph::Graph;
use crate::index::{closed_form, index_value, IndexKind, Tolerance};
use crate::verify::{
    check_inequality_catalog, check_maximizer_structure_range, check_phi_grid,
    check_power_sum_grid, check_transformation_deltas, fmt_value, to_csv, to_json,
    verify_max_theorem, verify_min, verify_small_diameter, VerificationReport,
    DEFAULT_GRID_MAX_DEGREE,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Sombor indices of unicyclic graphs")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Absolute tolerance for comparing index values.
    #[arg(long, global = true, default_value_t = crate::index::DEFAULT_TOLERANCE)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphEmit {
    Graphs,
    Count,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Emit {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    #[value(name = "u-n-d")]
    UNd,
    #[value(name = "u-abc")]
    UAbc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Max,
    Min,
    SmallDiameter,
    Structure,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the unicyclic graphs of order N up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only graphs of this diameter.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "graphs")]
        emit: GraphEmit,
    },
    /// Print a member of one of the extremal families.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Index of a graph read from a file or standard input.
    Index {
        #[arg(long, default_value = "so")]
        index: IndexKind,
        /// Graph file; standard input when absent or `-`.
        #[arg(long)]
        input: Option<String>,
    },
    /// Brute-force extremal value and optimal classes.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value = "so")]
        index: IndexKind,
        #[arg(long, default_value = "max")]
        direction: Direction,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Check the extremal statements against brute force.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        theorem: Theorem,
        /// Index for the maximum theorem; both when absent.
        #[arg(long)]
        index: Option<IndexKind>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        emit: Emit,
    },
    /// Grid checks of the monotonicity lemmas.
    Lemmas {
        #[arg(long, value_enum, default_value = "csv")]
        emit: Emit,
    },
    /// Constant inequalities and parameterized transformation deltas.
    Inequalities {
        #[arg(long, default_value_t = DEFAULT_GRID_MAX_DEGREE)]
        grid_max_degree: u32,
        #[arg(long, value_enum, default_value = "csv")]
        emit: Emit,
    },
    /// Closed-form maximum for order N and diameter D.
    ClosedForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "so")]
        index: IndexKind,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code. Output goes to stdout, diagnostics to stderr.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run_command`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_PASS {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        let _ = writeln!(err, "error: --tolerance must be a non-negative number");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let tol = Tolerance(cli.tolerance);
    // buffered so the work can run on the pool's threads
    let (result, stdout_buf, stderr_buf) = pool.install(|| {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let r = dispatch(cli.command, tol, &mut o, &mut e).map_err(|e| e.to_string());
        (r, o, e)
    });
    let _ = out.write_all(&stdout_buf);
    let _ = err.write_all(&stderr_buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    command: Command,
    tol: Tolerance,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match command {
        Command::Enumerate { n, d, emit } => {
            let classes = UnicyclicClasses::new(n)?;
            let selected: Vec<&Graph> = classes.with_diameter(d).map(|c| &c.graph).collect();
            match emit {
                GraphEmit::Count => writeln!(out, "{}", selected.len())?,
                GraphEmit::Graphs => {
                    for (k, g) in selected.iter().enumerate() {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        write!(out, "{g}")?;
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Construct {
            family,
            n,
            d,
            a,
            b,
            c,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| Error::Input(format!("--family needs --{flag}")))
            };
            let g = match family {
                Family::Cycle => build_cycle(n)?,
                Family::UNd => build_u_n_d(n, need(d, "d")?)?,
                Family::UAbc => build_u_abc(n, need(a, "a")?, need(b, "b")?, need(c, "c")?)?,
            };
            write!(out, "{g}")?;
            Ok(EXIT_PASS)
        }
        Command::Index { index, input } => {
            let text = match input.as_deref() {
                None | Some("-") => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
                Some(path) => fs::read_to_string(path)?,
            };
            let g: Graph = text.parse()?;
            writeln!(out, "{}", fmt_value(index_value(&g, index)))?;
            Ok(EXIT_PASS)
        }
        Command::Extremal {
            n,
            d,
            index,
            direction,
            emit,
        } => {
            let record = UnicyclicClasses::new(n)?.extremal(d, index, direction, tol)?;
            match emit {
                Emit::Json => {
                    let json = serde_json::to_string_pretty(&ExtremalJson::from(&record))?;
                    writeln!(out, "{json}")?;
                }
                Emit::Csv => write!(out, "{}", extremal_csv(&record)?)?,
            }
            Ok(EXIT_PASS)
        }
        Command::Verify {
            theorem,
            index,
            n_min,
            n_max,
            emit,
        } => {
            let reports = run_verify(theorem, index, n_min, n_max, tol)?;
            emit_reports(&reports, emit, out, err)
        }
        Command::Lemmas { emit } => {
            let reports = [check_phi_grid(), check_power_sum_grid()];
            emit_reports(&reports, emit, out, err)
        }
        Command::Inequalities {
            grid_max_degree,
            emit,
        } => {
            let reports = [
                check_inequality_catalog(),
                check_transformation_deltas(grid_max_degree)?,
            ];
            emit_reports(&reports, emit, out, err)
        }
        Command::ClosedForm { n, d, index } => {
            writeln!(out, "{}", fmt_value(closed_form(n, d, index)?))?;
            Ok(EXIT_PASS)
        }
    }
}

fn run_verify(
    theorem: Theorem,
    index: Option<IndexKind>,
    n_min: Option<usize>,
    n_max: usize,
    tol: Tolerance,
) -> Result<Vec<VerificationReport>> {
    // with `all`, each suite starts at its own smallest order
    let lo = |floor: usize| match (theorem, n_min) {
        (Theorem::All, Some(n)) => n.max(floor),
        (_, Some(n)) => n,
        (_, None) => floor,
    };
    let kinds: Vec<IndexKind> = index.map_or(IndexKind::ALL.to_vec(), |k| vec![k]);
    let wants = |t: Theorem| theorem == t || theorem == Theorem::All;
    let mut reports = Vec::new();
    if wants(Theorem::Max) {
        for &kind in &kinds {
            reports.push(verify_max_theorem(lo(6), n_max, kind, tol)?);
        }
    }
    if wants(Theorem::Min) {
        reports.push(verify_min(lo(5), n_max, tol)?);
    }
    if wants(Theorem::SmallDiameter) {
        reports.push(verify_small_diameter(lo(3), n_max, tol)?);
    }
    if wants(Theorem::Structure) {
        reports.push(check_maximizer_structure_range(lo(6), n_max, tol)?);
    }
    Ok(reports)
}

fn emit_reports(
    reports: &[VerificationReport],
    emit: Emit,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match emit {
        Emit::Csv => write!(out, "{}", to_csv(reports))?,
        Emit::Json => write!(out, "{}", to_json(reports))?,
    }
    let mut all_pass = true;
    for r in reports {
        for row in r.failures() {
            writeln!(
                err,
                "FAIL {} {}: expected {}, observed {}",
                r.suite, row.case, row.expected, row.observed
            )?;
        }
        all_pass &= r.pass();
    }
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct ExtremalJson {
    n: usize,
    d: Option<usize>,
    index: IndexKind,
    direction: Direction,
    value: String,
    optima: Vec<String>,
    count_searched: usize,
}

impl From<&ExtremalRecord> for ExtremalJson {
    fn from(r: &ExtremalRecord) -> Self {
        ExtremalJson {
            n: r.n,
            d: r.d,
            index: r.kind,
            direction: r.direction,
            value: fmt_value(r.value),
            optima: r.optima.iter().map(|c| c.to_hex()).collect(),
            count_searched: r.count_searched,
        }
    }
}

fn extremal_csv(r: &ExtremalRecord) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "d",
        "index",
        "direction",
        "value",
        "optima",
        "count_searched",
    ])?;
    let optima: Vec<String> = r.optima.iter().map(|c| c.to_hex()).collect();
    w.write_record([
        r.n.to_string(),
        r.d.map_or_else(String::new, |d| d.to_string()),
        r.kind.code().to_string(),
        r.direction.to_string(),
        fmt_value(r.value),
        optima.join("|"),
        r.count_searched.to_string(),
    ])?;
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
