//! Pass/fail reports for axiom and coherence suites, JSON-serializable as
//! `{axiom, status, witness?}` records.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub status: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, axiom: impl Into<String>) {
        self.checks.push(AxiomCheck { axiom: axiom.into(), status: CheckOutcome::Pass, witness: None });
    }

    pub fn fail(&mut self, axiom: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(AxiomCheck {
            axiom: axiom.into(),
            status: CheckOutcome::Fail,
            witness: Some(witness.into()),
        });
    }

    pub fn record(&mut self, axiom: impl Into<String>, ok: bool, witness: impl Fn() -> String) {
        if ok {
            self.pass(axiom);
        } else {
            self.fail(axiom, witness());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckOutcome::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.status == CheckOutcome::Fail)
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for c in other.checks {
            self.checks.push(AxiomCheck {
                axiom: format!("{}: {}", other.subject, c.axiom),
                status: c.status,
                witness: c.witness,
            });
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization")
    }
}

impl Default for CheckOutcome {
    fn default() -> Self {
        CheckOutcome::Pass
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.subject)?;
        for c in &self.checks {
            let status = match c.status {
                CheckOutcome::Pass => "pass",
                CheckOutcome::Fail => "FAIL",
            };
            match &c.witness {
                Some(w) => writeln!(f, "  {:<52} {}  (witness: {})", c.axiom, status, w)?,
                None => writeln!(f, "  {:<52} {}", c.axiom, status)?,
            }
        }
        Ok(())
    }
}
