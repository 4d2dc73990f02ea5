//! Named pass/fail checks with witnesses, the result type of every
//! validation gate. Failures are report content, not faults.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample, present iff the check failed.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: &str, witness: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        });
    }

    /// Record `name` as passed unless `witness` holds a counterexample.
    pub fn record(&mut self, name: &str, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  [ok]   {}", c.name)?,
                Some(w) => writeln!(f, "  [FAIL] {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
