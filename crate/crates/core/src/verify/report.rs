use serde::Serialize;

/// Outcome of a single verification case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The case's hypotheses do not hold; it neither passes nor fails.
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "true",
            Status::Fail => "false",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            rows: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        case: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        status: Status,
    ) {
        self.rows.push(ReportRow {
            case: case.into(),
            expected: expected.into(),
            observed: observed.into(),
            status,
        });
    }

    /// No row failed.
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// Formats a value with 12 significant digits in plain decimal notation.
pub fn fmt_value(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s == "-0" || s.chars().all(|c| c == '0' || c == '.' || c == '-') {
        return "0".into();
    }
    s
}

/// CSV with header `suite,case,expected,observed,pass`.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "case", "expected", "observed", "pass"])
        .expect("in-memory write");
    for report in reports {
        for row in &report.rows {
            w.write_record([
                report.suite.as_str(),
                &row.case,
                &row.expected,
                &row.observed,
                row.status.as_str(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[derive(Serialize)]
struct JsonRow<'a> {
    suite: &'a str,
    case: &'a str,
    expected: &'a str,
    observed: &'a str,
    pass: &'static str,
}

#[derive(Serialize)]
struct JsonSummary {
    rows: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    pass: bool,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    rows: Vec<JsonRow<'a>>,
    summary: JsonSummary,
}

/// JSON document with a `rows` array and a `summary` object.
pub fn to_json(reports: &[VerificationReport]) -> String {
    let rows: Vec<JsonRow<'_>> = reports
        .iter()
        .flat_map(|r| {
            r.rows.iter().map(move |row| JsonRow {
                suite: &r.suite,
                case: &row.case,
                expected: &row.expected,
                observed: &row.observed,
                pass: row.status.as_str(),
            })
        })
        .collect();
    let count = |s| reports.iter().map(|r| r.count(s)).sum();
    let summary = JsonSummary {
        rows: rows.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        pass: reports.iter().all(VerificationReport::pass),
    };
    let mut out = serde_json::to_string_pretty(&JsonDoc { rows, summary }).expect("serializable");
    out.push('\n');
    out
}
