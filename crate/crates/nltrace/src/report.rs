//! Report types shared by the check suites and the command-line front end.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

/// One named check: what was tested, at what tolerance, and a witness for
/// failures (inputs, indices, margins) so a failing run is reproducible.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckLine {
    pub fn pass(name: &str, tolerance: Option<f64>) -> Self {
        CheckLine {
            name: name.to_string(),
            verdict: Verdict::Pass,
            tolerance,
            witness: None,
        }
    }

    pub fn fail(name: &str, tolerance: Option<f64>, witness: Value) -> Self {
        CheckLine {
            name: name.to_string(),
            verdict: Verdict::Fail,
            tolerance,
            witness: Some(witness),
        }
    }
}

/// Top-level machine-readable output of a command run.
///
/// Serialization uses sorted keys and never emits non-finite numbers, so
/// identical inputs and seed produce byte-identical output except for
/// `elapsed_ms`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Map<String, Value>,
    pub checks: Vec<CheckLine>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Value::Object(Map::new()),
            seed: None,
            results: Map::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn insert_result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// JSON number from a float, rejecting non-finite values (serde_json would
/// silently emit null).
pub fn json_num(x: f64) -> Result<Value> {
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .ok_or_else(|| Error::Parse(format!("non-finite numeric result {x}")))
}
