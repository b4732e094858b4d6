use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// The first failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Verdict of one exhaustive check.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

/// JSON shape of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub n: usize,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    pub millis: u128,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub parameters: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.identity.clone(),
            n: self.n,
            passed: self.passed,
            checked: self.checked,
            counterexample: self.counterexample.clone(),
            millis: self.elapsed.as_millis(),
            parameters: self.parameters.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_record()).expect("report is serializable")
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} n={} checked={} ({} ms)",
            self.identity,
            self.n,
            self.checked,
            self.elapsed.as_millis()
        )?;
        for (key, value) in &self.parameters {
            write!(f, "\n  {key}: {value}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n  inputs: {}\n  lhs: {}\n  rhs: {}", c.inputs, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}
