//! Pass/fail reports for axiom checkers.
//!
//! Both the valuation checker and the hyperstructure engine emit the same
//! shape: a list of named axioms, each passing or failing with an explicit
//! witness. Failures are data, not errors — callers decide what a failing
//! report means.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    /// `None` = pass; `Some(witness)` = fail at the witness (spaceless,
    /// e.g. `x=1,y=2`).
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport { checks: vec![] }
    }

    pub fn pass(&mut self, axiom: &str) {
        self.checks.push(AxiomCheck {
            axiom: axiom.to_string(),
            witness: None,
        });
    }

    pub fn fail(&mut self, axiom: &str, witness: impl Into<String>) {
        self.checks.push(AxiomCheck {
            axiom: axiom.to_string(),
            witness: Some(witness.into()),
        });
    }

    /// Record a pass, or a fail carrying the first witness found.
    pub fn record(&mut self, axiom: &str, witness: Option<String>) {
        self.checks.push(AxiomCheck {
            axiom: axiom.to_string(),
            witness,
        });
    }

    pub fn checks(&self) -> &[AxiomCheck] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.witness.is_some())
            .map(|c| c.axiom.as_str())
            .collect()
    }

    pub fn witness_for(&self, axiom: &str) -> Option<&str> {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .and_then(|c| c.witness.as_deref())
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}=pass", self.axiom),
            Some(w) => write!(f, "{}=fail[{}]", self.axiom, w),
        }
    }
}

impl fmt::Display for AxiomReport {
    /// One `axiom=pass|fail[witness]` entry per check plus a final
    /// `result=` summary, space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{c} ")?;
        }
        write!(f, "result={}", if self.passed() { "pass" } else { "fail" })
    }
}
