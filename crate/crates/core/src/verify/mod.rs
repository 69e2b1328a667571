//! Named identity checks and a range runner.
//!
//! Each registered check recomputes both sides of one identity from a
//! [`Formulas`] implementation and compares them exactly. Running a range
//! collects every failure rather than stopping at the first, and the report
//! is the same whatever order the values of `a` were evaluated in.

pub mod checks;
pub mod examples;
pub mod mutation;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{Formulas, Standard, MIN_A};

pub use checks::{registry, CheckSpec, Comparison, Relation};
pub use examples::{reproduce_example, Example, ExampleRow};

/// Outcome of one check at one value of `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    #[serde(serialize_with = "crate::render::as_decimal")]
    pub a: u64,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    pub message: String,
}

/// Per-check aggregate over the range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub spec: &'static CheckSpec,
    pub passes: u64,
    /// Failing results, ordered by `a`.
    pub failures: Vec<CheckResult>,
    /// The result at the largest `a` of the range, pass or fail.
    pub witness: CheckResult,
}

impl CheckSummary {
    pub fn evaluated(&self) -> u64 {
        self.passes + self.failures.len() as u64
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub range: (u64, u64),
    /// Sorted by check name.
    pub checks: Vec<CheckSummary>,
    pub all_passed: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().flat_map(|c| c.failures.iter())
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn checks_passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    /// One-line summary, e.g. `12/12 checks, 0 failures`.
    pub fn summary(&self) -> String {
        format!(
            "{}/{} checks, {} failures",
            self.checks_passed(),
            self.checks.len(),
            self.failure_count()
        )
    }
}

/// Every report field except the elapsed time.
impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.range == other.range
            && self.checks == other.checks
            && self.all_passed == other.all_passed
    }
}

/// Resolves check names against the registry; `None` selects everything.
pub fn select_checks(selected: Option<&[String]>) -> Result<Vec<&'static CheckSpec>> {
    let all = registry();
    let Some(names) = selected else {
        return Ok(all.iter().collect());
    };
    let mut out: Vec<&'static CheckSpec> = Vec::new();
    for name in names {
        let spec = all
            .iter()
            .find(|c| c.name == name.as_str())
            .ok_or_else(|| Error::UnknownCheckName {
                name: name.clone(),
                valid: all.iter().map(|c| c.name).collect(),
            })?;
        if !out.iter().any(|c| c.name == spec.name) {
            out.push(spec);
        }
    }
    Ok(out)
}

pub fn validate_range(a_min: u64, a_max: u64) -> Result<()> {
    if a_min < MIN_A || a_min > a_max {
        return Err(Error::InvalidRange { a_min, a_max });
    }
    Ok(())
}

/// Runs the selected checks (all when `selected` is `None`) for every `a` in
/// `a_min..=a_max` against the standard formulas.
pub fn run_checks(
    a_min: u64,
    a_max: u64,
    selected: Option<&[String]>,
) -> Result<VerificationReport> {
    run_checks_with(&Standard, a_min, a_max, selected)
}

pub fn run_checks_with(
    formulas: &dyn Formulas,
    a_min: u64,
    a_max: u64,
    selected: Option<&[String]>,
) -> Result<VerificationReport> {
    validate_range(a_min, a_max)?;
    let mut specs = select_checks(selected)?;
    specs.sort_by_key(|s| s.name);
    let start = Instant::now();

    // rayon's collect keeps the index order of the range
    let per_a: Vec<Vec<CheckResult>> = (a_min..=a_max)
        .into_par_iter()
        .map(|a| {
            specs
                .iter()
                .map(|spec| evaluate(spec, formulas, a))
                .collect()
        })
        .collect();

    let mut checks: Vec<CheckSummary> = Vec::with_capacity(specs.len());
    for (idx, spec) in specs.iter().enumerate() {
        let mut passes = 0;
        let mut failures = Vec::new();
        for row in &per_a {
            let r = &row[idx];
            if r.passed {
                passes += 1;
            } else {
                failures.push(r.clone());
            }
        }
        let witness = per_a.last().expect("range is non-empty")[idx].clone();
        checks.push(CheckSummary {
            spec,
            passes,
            failures,
            witness,
        });
    }
    let all_passed = checks.iter().all(CheckSummary::passed);
    Ok(VerificationReport {
        range: (a_min, a_max),
        checks,
        all_passed,
        elapsed: start.elapsed(),
    })
}

/// Evaluates one check; an arithmetic error becomes a failing result.
pub fn evaluate(spec: &'static CheckSpec, formulas: &dyn Formulas, a: u64) -> CheckResult {
    match (spec.eval)(formulas, a) {
        Ok(cmp) => {
            let passed = cmp.passed();
            let message = if passed {
                String::new()
            } else {
                format!("expected lhs {} rhs", cmp.relation.symbol())
            };
            CheckResult {
                check: spec.name,
                a,
                passed,
                lhs: cmp.lhs,
                rhs: cmp.rhs,
                message,
            }
        }
        Err(err) => CheckResult {
            check: spec.name,
            a,
            passed: false,
            lhs: String::new(),
            rhs: String::new(),
            message: err.to_string(),
        },
    }
}
