use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Nonnegative,
    Growth,
    Symmetry,
    Stabilization,
    HNonnegative,
    /// The series expansion did not settle into the expected tail.
    SeriesTail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// `None` for the link itself, `Some(k)` for component `k`.
    pub component: Option<u8>,
    pub at: Vec<i64>,
    pub detail: String,
}

/// Failures found by `validate`; empty when every axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HValidationReport {
    pub violations: Vec<Violation>,
}

impl HValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, axiom: Axiom, at: &[i64], detail: String) {
        self.violations.push(Violation { axiom, component: None, at: at.to_vec(), detail });
    }

    pub(crate) fn absorb_component(&mut self, k: u8, other: HValidationReport) {
        for mut v in other.violations {
            v.component = Some(k);
            self.violations.push(v);
        }
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&[i64]> {
        self.violations.iter().find(|v| v.axiom == axiom).map(|v| v.at.as_slice())
    }
}

impl fmt::Display for HValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "valid");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(5) {
            let who = match v.component {
                Some(k) => format!("component {k} "),
                None => String::new(),
            };
            write!(f, "; {who}{:?} at {:?}: {}", v.axiom, v.at, v.detail)?;
        }
        if self.violations.len() > 5 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}
