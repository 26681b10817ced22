//! Structured pass/fail reports for the verification suites.

use serde::{Deserialize, Serialize};

/// One verified identity or property.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    /// Short stable identifier, e.g. "braid(g1,g2)".
    pub name: String,
    /// Self-contained statement of the law being checked.
    pub law: String,
    pub status: CheckStatus,
    /// Dimension, violated relation, or other evidence.
    pub witness: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// A named batch of checks with its parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub k: u32,
    pub n0: usize,
    pub n1: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, k: u32, n0: usize, n1: usize) -> Self {
        SuiteReport { suite: suite.into(), k, n0, n1, checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, law: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            law: law.into(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            witness: witness.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }
}
