//! Check records and the machine-readable report document.
//!
//! Report output is deliberately timestamp-free and fully ordered so two
//! runs over the same configuration produce byte-identical bytes.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{Rational, Scalar};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The arithmetic and sign conventions every reported value depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub metric: String,
    pub levi_civita: String,
    pub plane_wave: String,
    pub spin_factor: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Self {
            metric: "diag(1,-1,-1,-1)".to_owned(),
            levi_civita: "e_{0123} = +1, e^{0123} = -1".to_owned(),
            plane_wave: "exp(-i p.x); d_mu -> -i p_mu".to_owned(),
            spin_factor: "S^{ab} = -i M^{ab}".to_owned(),
        }
    }
}

/// One verified statement: exact inputs, verdict, exact witness values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check_id: String,
    /// What identity or derivation step the check pins down.
    pub reference: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub inputs: BTreeMap<String, String>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn sort_key(&self) -> (String, String, String) {
        (
            self.suite.clone(),
            self.check_id.clone(),
            format!("{:?}", self.inputs),
        )
    }
}

/// Fluent builder used by every check function.
#[derive(Debug, Clone)]
pub struct CheckBuilder {
    suite: String,
    check_id: String,
    reference: String,
    inputs: BTreeMap<String, String>,
    witness: BTreeMap<String, String>,
}

impl CheckBuilder {
    pub fn new(suite: &str, check_id: &str, reference: &str) -> Self {
        Self {
            suite: suite.to_owned(),
            check_id: check_id.to_owned(),
            reference: reference.to_owned(),
            inputs: BTreeMap::new(),
            witness: BTreeMap::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn witness(mut self, key: &str, value: impl Into<String>) -> Self {
        self.witness.insert(key.to_owned(), value.into());
        self
    }

    pub fn verdict(self, ok: bool) -> CheckRecord {
        CheckRecord {
            suite: self.suite,
            check_id: self.check_id,
            reference: self.reference,
            inputs: self.inputs,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: self.witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Full run output. Serialization is deterministic: records are sorted,
/// maps are ordered, and no clock or environment data is included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub conventions: Conventions,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl ReportDocument {
    pub fn assemble(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by_key(CheckRecord::sort_key);
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        Self {
            tool_version: TOOL_VERSION.to_owned(),
            conventions: Conventions::default(),
            summary: Summary { total: checks.len(), passed, failed },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Plain-text rendering: one line per check plus a summary line.
    /// With `decimal_digits`, exact witness values gain a truncated
    /// decimal approximation in parentheses.
    pub fn render_text(&self, decimal_digits: Option<usize>) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let inputs = if c.inputs.is_empty() {
                String::new()
            } else {
                let pairs: Vec<String> =
                    c.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!(" [{}]", pairs.join(" "))
            };
            out.push_str(&format!("{status} {s}/{id}{inputs}\n", s = c.suite, id = c.check_id));
            for (k, v) in &c.witness {
                let approx = decimal_digits
                    .and_then(|digits| decimal_annotation(v, digits))
                    .unwrap_or_default();
                out.push_str(&format!("  {k} = {v}{approx}\n"));
            }
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// Truncated decimal expansion of a rational, sign-aware.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    let int = a.to_integer();
    let mut frac = &a - Rational::from_integer(int.clone());
    let mut out = format!("{sign}{int}");
    if digits > 0 {
        out.push('.');
        let ten = Rational::from_integer(10.into());
        for _ in 0..digits {
            frac *= &ten;
            let d = frac.to_integer();
            out.push_str(&d.to_string());
            frac -= Rational::from_integer(d);
        }
    }
    out
}

/// Decimal annotation for an exact witness string, when it parses as a
/// scalar.
fn decimal_annotation(value: &str, digits: usize) -> Option<String> {
    let s = Scalar::parse(value).ok()?;
    let re = decimal_string(s.re(), digits);
    if s.im().is_zero() {
        return Some(format!(" (~{re})"));
    }
    let im = decimal_string(s.im(), digits);
    let sign = if s.im().is_negative() { "" } else { "+" };
    Some(format!(" (~{re}{sign}{im}i)"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sample_doc() -> ReportDocument {
        let b = CheckBuilder::new("structure", "b.second", "x")
            .input("p", "(1,0,0,1)")
            .witness("value", "-3/4")
            .verdict(true);
        let a = CheckBuilder::new("structure", "a.first", "y").verdict(false);
        ReportDocument::assemble(vec![b, a])
    }

    #[test]
    fn records_are_sorted_and_counted() {
        let doc = sample_doc();
        assert_eq!(doc.checks[0].check_id, "a.first");
        assert_eq!(doc.summary.total, 2);
        assert_eq!(doc.summary.passed, 1);
        assert_eq!(doc.summary.failed, 1);
        assert!(!doc.all_passed());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let doc = sample_doc();
        let first = doc.to_json();
        let parsed: ReportDocument = serde_json::from_str(&first).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_json(), first);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(-3, 4), 4), "-0.7500");
        assert_eq!(decimal_string(&rat(22, 7), 3), "3.142");
        assert_eq!(decimal_string(&rat(5, 1), 0), "5");
        let text = sample_doc().render_text(Some(2));
        assert!(text.contains("value = -3/4 (~-0.75)"));
        assert!(text.contains("FAIL structure/a.first"));
        assert!(text.contains("2 checks: 1 passed, 1 failed"));
    }
}
