//! Shared report format for the verification commands.
//!
//! Verifiers never panic on a failed identity: they collect one line per
//! checked instance and let the caller decide how to surface failures.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One checked instance: `{check, instance, expected, got, pass}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportLine {
    pub check: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// A named collection of checked instances.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), lines: Vec::new() }
    }

    pub fn push(
        &mut self,
        check: impl Into<String>,
        instance: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        pass: bool,
    ) {
        self.lines.push(ReportLine {
            check: check.into(),
            instance: instance.into(),
            expected: expected.into(),
            got: got.into(),
            pass,
        });
    }

    /// Record a plain pass/fail with no interesting value to show.
    pub fn check(&mut self, check: impl Into<String>, instance: impl Into<String>, pass: bool) {
        self.push(check, instance, "pass", if pass { "pass" } else { "fail" }, pass);
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| !l.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}/{} checks passed",
            self.name,
            self.lines.iter().filter(|l| l.pass).count(),
            self.lines.len()
        )?;
        for line in self.failures() {
            writeln!(
                f,
                "  FAIL {} [{}]: expected {}, got {}",
                line.check, line.instance, line.expected, line.got
            )?;
        }
        Ok(())
    }
}
