//! Two-sided comparisons produced by the verification routines.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One identity instance: a label and both sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub left: String,
    pub right: String,
}

impl Comparison {
    pub fn new(label: impl Into<String>, left: impl ToString, right: impl ToString) -> Self {
        Self {
            label: label.into(),
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "ok" } else { "MISMATCH" };
        write!(f, "{}: {} [{} | {}]", self.label, verdict, self.left, self.right)
    }
}
