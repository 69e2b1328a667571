//! Output formats. Every number is written as an exact decimal string, in
//! json and csv included, so arbitrarily large values survive consumers with
//! fixed-width number parsing.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::verify::{CheckResult, Example, ExampleRow, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
    #[default]
    Plain,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub(crate) fn as_decimal<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Column order of every invariants table.
pub const COLUMNS: [&str; 10] = [
    "a",
    "g",
    "genus_W",
    "exponent",
    "deg_gamma",
    "alpha",
    "beta",
    "m",
    "dim_Z",
    "rho",
];

/// One invariants row as decimal strings. Field order matches [`COLUMNS`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub a: String,
    pub g: String,
    #[serde(rename = "genus_W")]
    pub genus_w: String,
    pub exponent: String,
    pub deg_gamma: String,
    pub alpha: String,
    pub beta: String,
    pub m: String,
    #[serde(rename = "dim_Z")]
    pub dim_z: String,
    pub rho: String,
}

impl InvariantRecord {
    pub fn cells(&self) -> [&str; 10] {
        [
            &self.a,
            &self.g,
            &self.genus_w,
            &self.exponent,
            &self.deg_gamma,
            &self.alpha,
            &self.beta,
            &self.m,
            &self.dim_z,
            &self.rho,
        ]
    }
}

impl From<&InvariantSet> for InvariantRecord {
    fn from(s: &InvariantSet) -> Self {
        Self {
            a: s.params.a.to_string(),
            g: s.params.g.to_string(),
            genus_w: s.genus_w.to_string(),
            exponent: s.exponent_e.to_string(),
            deg_gamma: s.deg_gamma.to_string(),
            alpha: s.alpha.to_string(),
            beta: s.beta.to_string(),
            m: s.m.to_string(),
            dim_z: s.dim_z.to_string(),
            rho: s.rho.to_string(),
        }
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data always serializes");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
fn plain_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

fn csv_cell(s: &str) -> String {
    // values never need quoting; keep free text from introducing separators
    s.replace(',', ";")
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", header.join(","));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn render_invariants(set: &InvariantSet, format: OutputFormat) -> String {
    let rec = InvariantRecord::from(set);
    match format {
        OutputFormat::Json => to_json(&rec),
        OutputFormat::Plain => {
            let mut out = String::new();
            for (name, value) in COLUMNS.iter().zip(rec.cells()) {
                let _ = writeln!(out, "{name} = {value}");
            }
            out
        }
        _ => render_table(std::slice::from_ref(set), format),
    }
}

pub fn render_table(sets: &[InvariantSet], format: OutputFormat) -> String {
    let records: Vec<InvariantRecord> = sets.iter().map(InvariantRecord::from).collect();
    if format == OutputFormat::Json {
        return to_json(&records);
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| r.cells().iter().map(|c| c.to_string()).collect())
        .collect();
    match format {
        OutputFormat::Csv => csv_table(&COLUMNS, &rows),
        OutputFormat::Markdown => markdown_table(&COLUMNS, &rows),
        OutputFormat::Plain => plain_table(&COLUMNS, &rows),
        OutputFormat::Json => unreachable!(),
    }
}

#[derive(Serialize)]
struct RangeJson {
    a_min: String,
    a_max: String,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'static str,
    description: &'static str,
    context: &'static str,
    passes: String,
    evaluated: String,
    failures: Vec<&'a CheckResult>,
    witness: &'a CheckResult,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    range: RangeJson,
    checks: Vec<CheckJson<'a>>,
    all_passed: bool,
    summary: String,
}

/// Check results as rows; the witness at the top of the range comes first
/// for every check, followed by its failures.
fn report_rows(report: &VerificationReport) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for c in &report.checks {
        let witness_failed = !c.witness.passed;
        for r in std::iter::once(&c.witness).chain(
            c.failures
                .iter()
                .filter(|f| !(witness_failed && f.a == c.witness.a)),
        ) {
            rows.push(vec![
                r.check.to_string(),
                r.a.to_string(),
                if r.passed { "pass" } else { "FAIL" }.to_string(),
                r.lhs.clone(),
                r.rhs.clone(),
                r.message.clone(),
            ]);
        }
    }
    rows
}

pub fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    let (a_min, a_max) = report.range;
    match format {
        OutputFormat::Json => to_json(&ReportJson {
            range: RangeJson {
                a_min: a_min.to_string(),
                a_max: a_max.to_string(),
            },
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.spec.name,
                    description: c.spec.description,
                    context: c.spec.context,
                    passes: c.passes.to_string(),
                    evaluated: c.evaluated().to_string(),
                    failures: c.failures.iter().collect(),
                    witness: &c.witness,
                })
                .collect(),
            all_passed: report.all_passed,
            summary: report.summary(),
        }),
        OutputFormat::Csv => csv_table(
            &["check", "a", "status", "lhs", "rhs", "message"],
            &report_rows(report),
        ),
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.spec.name.to_string(),
                        format!("{}/{}", c.passes, c.evaluated()),
                        if c.passed() { "✓" } else { "✗" }.to_string(),
                        c.spec.description.to_string(),
                    ]
                })
                .collect();
            let mut out = format!("Checks for a = {a_min}..={a_max}\n\n");
            out.push_str(&markdown_table(
                &["check", "passes", "ok", "identity"],
                &rows,
            ));
            if report.failure_count() > 0 {
                let fails: Vec<Vec<String>> = report
                    .failures()
                    .map(|f| {
                        vec![
                            f.check.to_string(),
                            f.a.to_string(),
                            f.lhs.clone(),
                            f.rhs.clone(),
                            f.message.clone(),
                        ]
                    })
                    .collect();
                out.push('\n');
                out.push_str(&markdown_table(
                    &["check", "a", "lhs", "rhs", "message"],
                    &fails,
                ));
            }
            let _ = writeln!(out, "\n{}", report.summary());
            out
        }
        OutputFormat::Plain => {
            let mut out = format!("checks for a = {a_min}..={a_max}\n");
            let width = report
                .checks
                .iter()
                .map(|c| c.spec.name.len())
                .max()
                .unwrap_or(0);
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status}  {:<width$}  {}/{}  {}",
                    c.spec.name,
                    c.passes,
                    c.evaluated(),
                    c.spec.description
                );
                for f in &c.failures {
                    let _ = writeln!(
                        out,
                        "      a = {}: lhs {} rhs {} ({})",
                        f.a, f.lhs, f.rhs, f.message
                    );
                }
            }
            let _ = writeln!(out, "{}", report.summary());
            out
        }
    }
}

#[derive(Serialize)]
struct ExampleJson<'a> {
    example: &'static str,
    a: String,
    rows: &'a [ExampleRow],
    all_matched: bool,
}

pub fn render_example(example: Example, rows: &[ExampleRow], format: OutputFormat) -> String {
    let all_matched = rows.iter().all(|r| r.matched);
    let mark = |m: bool| if m { "✓" } else { "✗" }.to_string();
    let header = ["label", "computed", "expected", "match"];
    match format {
        OutputFormat::Json => to_json(&ExampleJson {
            example: example.name(),
            a: example.a().to_string(),
            rows,
            all_matched,
        }),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.into(),
                        r.computed.clone(),
                        r.expected.clone(),
                        r.matched.to_string(),
                    ]
                })
                .collect();
            csv_table(&header, &cells)
        }
        OutputFormat::Markdown | OutputFormat::Plain => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.into(),
                        r.computed.clone(),
                        r.expected.clone(),
                        mark(r.matched),
                    ]
                })
                .collect();
            let title = format!(
                "{} (a = {}, g = {})\n",
                example.name(),
                example.a(),
                2 * example.a() + 1
            );
            let body = if format == OutputFormat::Markdown {
                format!("{title}\n{}", markdown_table(&header, &cells))
            } else {
                format!("{title}{}", plain_table(&header, &cells))
            };
            body
        }
    }
}
