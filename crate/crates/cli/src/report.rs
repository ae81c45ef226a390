//! Versioned JSON report shared by every subcommand.

use hermpos::verify::{Check, Status};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs,
            results,
            checks: Vec::new(),
            seed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Pretty JSON with keys in sorted order, so that parsing and
    /// re-serializing reproduces the same bytes.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        canonical_json(&value)
    }
}

pub fn canonical_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("value is serializable")
}

pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
}
