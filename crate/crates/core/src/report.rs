//! Machine-readable results of a verification run.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::verify::{Suite, VerifyConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// One identity evaluated at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub identity: String,
    pub parameters: BTreeMap<String, Value>,
    /// `None` when evaluation raised an error.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// The identity as stated cannot hold; see the README.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub known_unattainable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub seed: u64,
    /// Parameter draws per suite, after overrides.
    pub samples: BTreeMap<String, usize>,
    pub config: VerifyConfig,
    pub cases: Vec<Case>,
    /// Residuals of alternative readings and other quantities that are reported, not judged.
    pub observations: BTreeMap<String, Value>,
    /// Yang-Baxter boundary assignments with no admissible inner color.
    pub skipped: usize,
    pub failures: usize,
    pub unexpected_failures: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: Suite, seed: u64, config: VerifyConfig) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite,
            seed,
            samples: BTreeMap::new(),
            config,
            cases: Vec::new(),
            observations: BTreeMap::new(),
            skipped: 0,
            failures: 0,
            unexpected_failures: 0,
            pass: true,
            wall_time: None,
        }
    }

    /// Recomputes the failure counts and the overall verdict from the cases.
    pub fn finish(&mut self) {
        self.failures = self.cases.iter().filter(|c| !c.pass).count();
        self.unexpected_failures = self
            .cases
            .iter()
            .filter(|c| !c.pass && !c.known_unattainable)
            .count();
        self.pass = self.failures == 0;
    }

    pub fn failing(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// Largest residual among cases whose identity satisfies `select`; errors count as infinite.
    pub fn worst(&self, select: impl Fn(&str) -> bool) -> Option<f64> {
        self.cases
            .iter()
            .filter(|c| select(&c.identity))
            .map(|c| c.residual.unwrap_or(f64::INFINITY))
            .reduce(f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
