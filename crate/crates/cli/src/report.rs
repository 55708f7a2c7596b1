use serde::Serialize;
use serde_json::Value;

/// One named check with its parameters and outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub parameters: Value,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a `verify` or `identities` run; passes iff every check does.
#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, name: &str, parameters: Value, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            parameters,
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "checks": self.checks,
            "summary": {
                "total": self.checks.len(),
                "passed": self.checks.len() - self.failed_count(),
                "failed": self.failed_count(),
            },
            "passed": self.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "[{mark}] {} {} - {}\n",
                c.name, c.parameters, c.detail
            ));
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            self.failed_count()
        ));
        out
    }
}
