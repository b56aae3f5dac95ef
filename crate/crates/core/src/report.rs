//! Pass/fail records shared by every verification suite.

use std::fmt;

use serde::Serialize;

/// Version of the JSON layout emitted for reports and exports.
pub const SCHEMA_VERSION: u32 = 1;

/// One verified claim.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// Stable identifier, e.g. `b-set/hyperplanes`.
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: &str, description: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.to_owned(),
            description: description.to_owned(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn check(&mut self, id: &str, description: &str, passed: bool, detail: impl Into<String>) {
        self.push(Check::new(id, description, passed, detail));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{mark}] {:<32} {}", c.id, c.description)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
