//! Verification reports shared by the library suites and the CLI.

use std::fmt::Display;

use serde::Serialize;

use crate::ring::{Certify, Depth};

const WITNESS_LIMIT: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The identity being certified, written out.
    pub anchor: String,
    pub pass: bool,
    pub depth: Option<Depth>,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            pass: true,
            depth: None,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            pass: false,
            depth: None,
            witness: Some(clip(witness.into())),
        }
    }

    /// Passes or fails according to `ok`; the witness is only kept on failure.
    pub fn from_bool(
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, witness())
        }
    }

    pub fn with_depth(mut self, depth: Depth) -> Self {
        self.depth = Some(depth);
        self
    }

    /// Compares two truncated values on their overlap. A comparison that
    /// had nothing to compare fails.
    pub fn compare<T: Certify + Display>(
        name: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let (equal, depth) = lhs.agree(rhs);
        let check = if depth.is_vacuous() {
            Self::fail(name, anchor, format!("vacuous comparison at depth {depth}"))
        } else if equal {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, format!("lhs = {lhs}; rhs = {rhs}"))
        };
        check.with_depth(depth)
    }
}

fn clip(mut s: String) -> String {
    if s.len() > WITNESS_LIMIT {
        let mut cut = WITNESS_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

/// Accumulates comparisons into one check, keeping the first failure and
/// the shallowest depth.
#[derive(Debug, Clone)]
pub struct CheckAccumulator {
    name: String,
    anchor: String,
    depth: Option<Depth>,
    failure: Option<String>,
    count: usize,
}

impl CheckAccumulator {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckAccumulator {
            name: name.into(),
            anchor: anchor.into(),
            depth: None,
            failure: None,
            count: 0,
        }
    }

    pub fn compare<T: Certify + Display>(&mut self, label: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.count += 1;
        let (equal, depth) = lhs.agree(rhs);
        self.depth = Some(self.depth.map_or(depth, |d| d.meet(depth)));
        if self.failure.is_some() {
            return;
        }
        if depth.is_vacuous() {
            self.failure = Some(format!("{}: vacuous comparison at depth {depth}", label()));
        } else if !equal {
            self.failure = Some(format!("{}: lhs = {lhs}; rhs = {rhs}", label()));
        }
    }

    pub fn require(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(label());
        }
    }

    pub fn finish(self) -> Check {
        let mut check = match self.failure {
            Some(w) => Check::fail(self.name, self.anchor, w),
            None if self.count == 0 => Check::fail(self.name, self.anchor, "no cases were checked"),
            None => Check::pass(self.name, self.anchor),
        };
        check.depth = self.depth;
        check
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            notes: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.notes.extend(other.notes);
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> Summary {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        Summary {
            total: self.checks.len(),
            passed,
            failed: self.checks.len() - passed,
        }
    }

    /// Stable order by check name.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarQ;

    #[test]
    fn accumulator_keeps_first_failure() {
        let mut acc = CheckAccumulator::new("x", "a = b");
        acc.compare(|| "one".into(), &ScalarQ::one(), &ScalarQ::one());
        acc.compare(|| "two".into(), &ScalarQ::one(), &ScalarQ::zero());
        acc.compare(|| "three".into(), &ScalarQ::q(), &ScalarQ::zero());
        let c = acc.finish();
        assert!(!c.pass);
        assert!(c.witness.unwrap().starts_with("two"));
    }

    #[test]
    fn empty_accumulator_fails() {
        assert!(!CheckAccumulator::new("x", "").finish().pass);
    }

    #[test]
    fn summary_counts() {
        let mut r = Report::new("s");
        r.push(Check::pass("b", ""));
        r.push(Check::fail("a", "", "w"));
        r.sort();
        assert_eq!(r.checks[0].name, "a");
        assert_eq!(r.summary(), Summary { total: 2, passed: 1, failed: 1 });
        assert!(!r.all_pass());
    }

    #[test]
    fn long_witnesses_are_clipped() {
        let c = Check::fail("x", "", "é".repeat(1000));
        assert!(c.witness.unwrap().ends_with(" ..."));
    }
}
