//! Per-check verification records emitted by every audit.

use serde::Serialize;
use std::fmt;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Stated in the source material; asserted directly.
    Paper,
    /// Immediate consequence; asserted directly.
    Trivial,
    /// Computed by an independent oracle before being frozen.
    Derived,
}

/// One check: inputs, both sides, residual, budget, verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
    pub budget: f64,
    pub pass: bool,
    pub provenance: Provenance,
}

impl VerificationReport {
    pub fn new(
        check_id: &str,
        inputs: Vec<(String, String)>,
        lhs: f64,
        rhs: f64,
        residual: f64,
        budget: f64,
        provenance: Provenance,
    ) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            inputs,
            lhs: format!("{lhs:.17e}"),
            rhs: format!("{rhs:.17e}"),
            residual,
            budget,
            pass: residual <= budget,
            provenance,
        }
    }

    pub fn with_sides(mut self, lhs: &str, rhs: &str) -> Self {
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: residual {:.3e} vs budget {:.3e} ({:?})",
            if self.pass { "PASS" } else { "FAIL" },
            self.check_id,
            self.residual,
            self.budget,
            self.provenance
        )
    }
}

/// Convenience for building the `inputs` list.
pub fn kv(k: &str, v: impl fmt::Display) -> (String, String) {
    (k.to_string(), v.to_string())
}
