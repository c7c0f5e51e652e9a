//! Report-style results for consistency checkers: a named check either
//! passes or carries a list of violations, each tagged with the anchor of
//! the claim it tests.

use std::fmt;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub anchor: String,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            anchor: anchor.into(),
            violations: Vec::new(),
        }
    }

    pub fn violation(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} [{}]", self.name, self.anchor)
        } else {
            writeln!(f, "FAIL {} [{}]", self.name, self.anchor)?;
            for v in &self.violations {
                writeln!(f, "  - {v}")?;
            }
            Ok(())
        }
    }
}
