//! Check/report structures shared by the verification entry points and the CLI.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub inputs: serde_json::Value,
    pub expected: serde_json::Value,
    pub got: serde_json::Value,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        inputs: serde_json::Value,
        expected: serde_json::Value,
        got: serde_json::Value,
    ) -> Self {
        let expected = expected;
        let pass = expected == got;
        Check {
            name: name.into(),
            inputs,
            expected,
            got,
            pass,
        }
    }

    pub fn bool(name: impl Into<String>, inputs: serde_json::Value, ok: bool) -> Self {
        Check {
            name: name.into(),
            inputs,
            expected: serde_json::json!(true),
            got: serde_json::json!(ok),
            pass: ok,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub failures: usize,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        if !check.pass {
            self.failures += 1;
        }
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: Report) {
        self.failures += other.failures;
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}
