//! Named checks that put a formula next to a brute-force count and record
//! both sides for every `n`.

mod catalog;
pub mod oracle;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use catalog::catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    MustPass,
    /// The formula side is known to disagree with enumeration on a
    /// documented set of rows.
    Suspect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    DiscrepancyDocumented,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::DiscrepancyDocumented => "discrepancy_documented",
        })
    }
}

pub type CheckFn = fn(usize) -> Result<Vec<Row>>;

#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub default_max_n: usize,
    /// Largest `n` the check will run at, whatever is requested.
    pub max_feasible_n: usize,
    pub expectation: Expectation,
    /// For suspect checks, the `n` values expected to mismatch when run up
    /// to the given bound.
    pub documented_mismatches: fn(usize) -> BTreeSet<usize>,
    pub run: CheckFn,
}

/// One comparison. `label` separates several comparisons at the same `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub formula: String,
    pub oracle: String,
    pub equal: bool,
}

impl Row {
    pub fn new(n: usize, formula: impl ToString, oracle: impl ToString) -> Self {
        let (formula, oracle) = (formula.to_string(), oracle.to_string());
        Self { n, label: None, equal: formula == oracle, formula, oracle }
    }

    pub fn labeled(n: usize, label: impl Into<String>, formula: impl ToString, oracle: impl ToString) -> Self {
        Self { label: Some(label.into()), ..Self::new(n, formula, oracle) }
    }

    /// A row whose equality is decided by the caller, e.g. up to a
    /// floating-point tolerance.
    pub fn judged(n: usize, label: impl Into<String>, formula: impl ToString, oracle: impl ToString, equal: bool) -> Self {
        Self { equal, ..Self::labeled(n, label, formula, oracle) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub expectation: Expectation,
    pub verdict: Verdict,
    pub max_n: usize,
    pub mismatched_n: Vec<usize>,
    pub rows: Vec<Row>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn is_must_pass_failure(&self) -> bool {
        self.expectation == Expectation::MustPass && self.verdict != Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub documented: usize,
    pub reports: Vec<CheckReport>,
}

impl Summary {
    pub fn must_pass_failures(&self) -> Vec<&CheckReport> {
        self.reports.iter().filter(|r| r.is_must_pass_failure()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn no_documented_mismatches(_: usize) -> BTreeSet<usize> {
    BTreeSet::new()
}

pub fn list_checks() -> Vec<CheckSpec> {
    catalog()
}

pub fn find_check(id: &str) -> Result<CheckSpec> {
    catalog()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check for `n` up to `max_n` (default when `None`), capped at the
/// check's feasible bound.
pub fn run_check(id: &str, max_n: Option<usize>) -> Result<CheckReport> {
    run_spec(&find_check(id)?, max_n)
}

pub fn run_spec(spec: &CheckSpec, max_n: Option<usize>) -> Result<CheckReport> {
    let max_n = max_n.unwrap_or(spec.default_max_n).min(spec.max_feasible_n);
    let start = Instant::now();
    let rows = (spec.run)(max_n)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let mismatched: BTreeSet<usize> = rows.iter().filter(|r| !r.equal).map(|r| r.n).collect();
    let verdict = if mismatched.is_empty() {
        Verdict::Pass
    } else if spec.expectation == Expectation::Suspect && mismatched == (spec.documented_mismatches)(max_n) {
        Verdict::DiscrepancyDocumented
    } else {
        Verdict::Fail
    };
    Ok(CheckReport {
        id: spec.id.to_string(),
        expectation: spec.expectation,
        verdict,
        max_n,
        mismatched_n: mismatched.into_iter().collect(),
        rows,
        runtime_ms,
    })
}

/// Every check, run in parallel and reported in id order.
pub fn run_all(max_n: Option<usize>) -> Result<Summary> {
    let mut specs = catalog();
    specs.sort_by_key(|s| s.id);
    let reports = specs
        .par_iter()
        .map(|s| run_spec(s, max_n))
        .collect::<Result<Vec<_>>>()?;
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    Ok(Summary {
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        documented: count(Verdict::DiscrepancyDocumented),
        reports,
    })
}
