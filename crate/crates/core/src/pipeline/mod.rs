//! End-to-end verification runs and their certificate reports.
//!
//! A report is an ordered list of checks. Each check records what was
//! computed, what was expected, where the expectation comes from, and a
//! witness. The overall verdict is the conjunction of all checks.

mod standalone;
mod theorem;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use standalone::{
    dump_structure_constants, ermolaev_summary, grade_table, verify_ermolaev_standalone,
    ErmolaevSummary, GradeTable,
};
pub use theorem::verify_theorem;

use crate::rootdata::SIGN_CONVENTION;

pub const SCHEMA_VERSION: &str = "modlie-certificate/1";

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Computation(String),
}

/// Settings for [`verify_theorem`]. The defaults reproduce the F4, p = 3 setting.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationConfig {
    pub p: u32,
    pub type_label: String,
    pub sign_convention: String,
    pub seed: u64,
    /// Partner of `e` generating `L`; replace to run a negative control.
    pub f_label: String,
    /// Test hook: replace the expected value of the named checks.
    pub expected_overrides: BTreeMap<String, Value>,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            p: 3,
            type_label: "F4".to_string(),
            sign_convention: SIGN_CONVENTION.to_string(),
            seed: 1,
            f_label: "f1232".to_string(),
            expected_overrides: BTreeMap::new(),
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    /// A value stated for this construction in the literature.
    ReferenceValue,
    /// A value obtained by an independent computation or count.
    IndependentComputation,
    /// A value forced by definitions.
    Definition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub anchor: String,
    pub source: Source,
    pub computed: Value,
    pub expected: Value,
    pub status: Status,
    pub witness: Value,
}

/// A sign choice resolved by scanning `a ± b` style expressions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignChoice {
    pub element: String,
    pub literature_form: String,
    pub resolved_form: String,
    pub same_signs: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigSummary {
    pub p: u32,
    pub type_label: String,
    pub sign_convention: String,
    pub seed: u64,
    pub f_label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateReport {
    pub schema: String,
    pub title: String,
    pub config: ConfigSummary,
    pub sign_choices: Vec<SignChoice>,
    pub checks: Vec<Check>,
    pub verdict: bool,
    pub notes: Vec<String>,
}

impl CertificateReport {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.check(id).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({})", self.title, self.schema);
        let _ = writeln!(
            out,
            "type {}, p = {}, sign convention {}, seed {}, f = {}",
            self.config.type_label,
            self.config.p,
            self.config.sign_convention,
            self.config.seed,
            self.config.f_label
        );
        for s in &self.sign_choices {
            let _ = writeln!(
                out,
                "sign choice: {} = {} (literature form {}{})",
                s.element,
                s.resolved_form,
                s.literature_form,
                if s.same_signs { "" } else { ", signs differ" }
            );
        }
        out.push('\n');
        let id_w = self
            .checks
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(2)
            .max(2);
        let cells: Vec<(String, String)> = self
            .checks
            .iter()
            .map(|c| (compact(&c.computed), compact(&c.expected)))
            .collect();
        let comp_w = cells
            .iter()
            .map(|c| c.0.len())
            .max()
            .unwrap_or(8)
            .clamp(8, 48);
        let _ = writeln!(
            out,
            "{:<6}  {:<id_w$}  {:<comp_w$}  EXPECTED",
            "STATUS", "ID", "COMPUTED"
        );
        for (c, (comp, exp)) in self.checks.iter().zip(&cells) {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "{status:<6}  {:<id_w$}  {comp:<comp_w$}  {exp}", c.id);
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let _ = writeln!(
            out,
            "\nverdict: {} ({passed}/{} checks pass)",
            if self.verdict { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        for c in self.failures() {
            let _ = writeln!(
                out,
                "  failed {}: {} [{}]",
                c.id,
                c.claim,
                compact(&c.witness)
            );
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "notes:");
            for n in &self.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// Accumulates checks, applying expected-value overrides.
pub(crate) struct Recorder<'a> {
    overrides: &'a BTreeMap<String, Value>,
    checks: Vec<Check>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn new(overrides: &'a BTreeMap<String, Value>) -> Self {
        Recorder {
            overrides,
            checks: Vec::new(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn check(
        &mut self,
        id: &str,
        claim: &str,
        anchor: &str,
        source: Source,
        computed: impl Serialize,
        expected: impl Serialize,
        witness: Value,
    ) -> bool {
        let computed = serde_json::to_value(computed).expect("serializable");
        let expected = self
            .overrides
            .get(id)
            .cloned()
            .unwrap_or_else(|| serde_json::to_value(expected).expect("serializable"));
        let status = if computed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            id: id.to_string(),
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            source,
            computed,
            expected,
            status,
            witness,
        });
        status == Status::Pass
    }

    /// Record that the run stopped before completing.
    pub(crate) fn halt(&mut self, reason: &str) {
        self.checks.push(Check {
            id: "run.completed".to_string(),
            claim: "every computation in the run completed".to_string(),
            anchor: "pipeline".to_string(),
            source: Source::Definition,
            computed: Value::Bool(false),
            expected: Value::Bool(true),
            status: Status::Fail,
            witness: Value::String(reason.to_string()),
        });
    }

    pub(crate) fn finish(self) -> Vec<Check> {
        self.checks
    }
}

pub(crate) fn assemble(
    title: &str,
    config: ConfigSummary,
    sign_choices: Vec<SignChoice>,
    checks: Vec<Check>,
    notes: Vec<String>,
) -> CertificateReport {
    let verdict = !checks.is_empty() && checks.iter().all(|c| c.status == Status::Pass);
    CertificateReport {
        schema: SCHEMA_VERSION.to_string(),
        title: title.to_string(),
        config,
        sign_choices,
        checks,
        verdict,
        notes,
    }
}
