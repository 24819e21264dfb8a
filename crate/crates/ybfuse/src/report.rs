//! Pass/fail reports produced by the verification suites.

use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
            millis: 0,
        });
    }

    /// Runs a closure as a named check, recording wall time and pass/fail.
    /// The closure returns `Ok(None)` on pass, `Ok(Some(detail))` on failure.
    pub fn run(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<Option<String>, crate::error::Error>,
    ) {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(None) => (true, None),
            Ok(Some(d)) => (false, Some(d)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Machine-readable form. Wall-clock timings are omitted so the bytes
    /// are reproducible across runs with identical flags.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Human-readable form with per-check timing.
    pub fn pretty(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {} ({} ms)", c.name, c.millis));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" -- {d}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {}/{} checks passed\n",
            if self.passed() { "ok" } else { "FAILED" },
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}
