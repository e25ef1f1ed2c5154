//! Machine-checkable verification reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// A published theorem or worked example.
    Theorem,
    /// An independent computation (brute force, second algorithm).
    Oracle,
    /// Immediate from the definitions.
    Definition,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub inputs: Value,
    pub computed: Value,
    pub expected: Value,
    pub basis: Basis,
    pub verdict: Verdict,
    /// Context that is reported but not compared.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

impl VerificationReport {
    /// A pass/fail report: the verdict is `pass` iff `computed == expected`.
    pub fn compare(statement: &str, inputs: Value, computed: Value, expected: Value, basis: Basis) -> Self {
        let verdict = if computed == expected {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            statement: statement.to_string(),
            inputs,
            computed,
            expected,
            basis,
            verdict,
            details: Value::Null,
            notice: None,
            runtime_ms: None,
        }
    }

    pub fn skipped(statement: &str, inputs: Value, notice: impl Into<String>) -> Self {
        VerificationReport {
            statement: statement.to_string(),
            inputs,
            computed: Value::Null,
            expected: Value::Null,
            basis: Basis::Definition,
            verdict: Verdict::Skipped,
            details: Value::Null,
            notice: Some(notice.into()),
            runtime_ms: None,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn with_notice(mut self, notice: impl Into<String>) -> Self {
        self.notice = Some(notice.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Runs `f` and stamps its wall time on the report when `timed` is set.
/// Off by default so that reports stay byte-identical across runs.
pub fn timed(timed: bool, f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut r = f();
    if timed {
        r.runtime_ms = Some((start.elapsed().as_secs_f64() * 1e3 * 1e3).round() / 1e3);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_follows_equality() {
        let r = VerificationReport::compare("x", json!({}), json!(1), json!(1), Basis::Definition);
        assert!(r.passed());
        let r = VerificationReport::compare("x", json!({}), json!(1), json!(2), Basis::Definition);
        assert!(r.failed());
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"verdict\":\"fail\""));
        assert!(!s.contains("runtime_ms"));
    }
}
