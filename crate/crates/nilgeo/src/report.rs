//! Named pass/fail checks with residual magnitudes.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
}

/// Aggregate of named checks; `overall` is the conjunction of the
/// individual `passed` flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport {
            checks: Vec::new(),
            overall: true,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, residual: f64) {
        self.overall &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            residual,
        });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Comma-joined names of the failing checks, for diagnostics.
    pub fn failure_summary(&self) -> String {
        let failed: Vec<&str> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        if failed.is_empty() {
            "no failing checks".to_string()
        } else {
            failed.join(", ")
        }
    }
}

impl Default for ValidationReport {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut r = ValidationReport::new();
        assert!(r.overall);
        r.push("a", true, 0.0);
        assert!(r.overall);
        r.push("b", false, 1.0);
        assert!(!r.overall);
        r.push("c", true, 0.0);
        assert!(!r.overall);
        assert_eq!(r.failure_summary(), "b");
    }
}
