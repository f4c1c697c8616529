use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Axiom name, e.g. `"pentagon"` or `"horizontal strictness"`.
    pub axiom: String,
    /// Human readable witness naming the offending tuple.
    pub witness: String,
}

/// Outcome of an exhaustive check. An empty violation list means pass.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub violations: Vec<Violation>,
    /// When set, violations past this count are dropped unformatted.
    #[serde(skip)]
    cap: Option<usize>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            violations: Vec::new(),
            cap: None,
        }
    }

    /// A report that keeps only the first violation; used where only
    /// pass/fail matters, such as filtering enumerations.
    pub fn first_only(subject: impl Into<String>) -> Self {
        Report {
            cap: Some(1),
            ..Report::new(subject)
        }
    }

    fn full(&self) -> bool {
        self.cap.is_some_and(|c| self.violations.len() >= c)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: impl Into<String>) {
        if self.full() {
            return;
        }
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness: witness.into(),
        });
    }

    /// Records a failure only when `ok` is false.
    pub fn require(&mut self, ok: bool, axiom: &str, witness: impl FnOnce() -> String) {
        if !ok && !self.full() {
            self.push(axiom, witness());
        }
    }

    /// Appends the violations of a sub-check, prefixing their axiom names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for v in other.violations {
            self.push(format!("{prefix}: {}", v.axiom), v.witness);
        }
    }

    /// Appends the violations of a sub-check unchanged.
    pub fn extend(&mut self, other: Report) {
        for v in other.violations {
            self.push(v.axiom, v.witness);
        }
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    /// Distinct axiom names in first-seen order.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.axiom.as_str()) {
                seen.push(&v.axiom);
            }
        }
        seen
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: pass", self.subject);
        }
        writeln!(f, "{}: FAIL ({} violations)", self.subject, self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}
