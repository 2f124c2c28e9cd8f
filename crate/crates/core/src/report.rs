//! Check reports shared by every verification routine.

use serde::{Deserialize, Serialize};

/// Outcome of one law checked exhaustively on an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// The identity being checked, in words or symbols.
    pub law: String,
    pub passed: bool,
    /// First witness of failure.
    pub counterexample: Option<String>,
}

/// An ordered list of check records. Verification never stops at the first failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Record a check; `Err` carries the counterexample.
    pub fn check(&mut self, id: impl Into<String>, law: impl Into<String>, outcome: Result<(), String>) {
        let (passed, counterexample) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.records.push(CheckRecord {
            id: id.into(),
            law: law.into(),
            passed,
            counterexample,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// True iff a record with this id exists and passed.
    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|r| r.passed)
    }

    /// Append another report's records with ids prefixed by `prefix.`.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut r in other.records {
            if !prefix.is_empty() {
                r.id = format!("{prefix}.{}", r.id);
            }
            self.records.push(r);
        }
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// First element of `items` for which `f` reports a failure, as a witness string.
pub(crate) fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(&T) -> Option<String>,
) -> Result<(), String> {
    for item in items {
        if let Some(w) = f(&item) {
            return Err(w);
        }
    }
    Ok(())
}
