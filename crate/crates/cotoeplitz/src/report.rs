//! Pass/fail bookkeeping shared by the checkers, the verification
//! suites, and the CLI.
//!
//! Checks that probe a genuine identity are expected to hold; checks
//! that probe one of the documented negative results are expected to
//! fail, and a suite counts such a check as satisfied exactly when the
//! failure shows up as documented. [`CheckItem::satisfied`] encodes
//! that rule in one place.

use std::fmt;

use serde::Serialize;

/// Two sides of an identity, kept exactly as computed.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Comparison<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Comparison { lhs, rhs }
    }

    pub fn agree(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<T: fmt::Display> fmt::Display for Comparison<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lhs = {}; rhs = {}", self.lhs, self.rhs)
    }
}

/// What a check is supposed to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// The identity should hold.
    Hold,
    /// The identity is a documented negative result and should fail.
    FailAsDocumented,
}

/// One named check with its observed outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub expectation: Expectation,
    /// Whether the probed identity held when evaluated.
    pub observed_pass: bool,
    /// Human-readable evidence: the two sides, a counterexample, or a
    /// short note.
    pub witness: String,
}

impl CheckItem {
    pub fn holds(name: impl Into<String>, observed_pass: bool, witness: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            expectation: Expectation::Hold,
            observed_pass,
            witness: witness.into(),
        }
    }

    pub fn documented_failure(
        name: impl Into<String>,
        observed_pass: bool,
        witness: impl Into<String>,
    ) -> Self {
        CheckItem {
            name: name.into(),
            expectation: Expectation::FailAsDocumented,
            observed_pass,
            witness: witness.into(),
        }
    }

    /// A check is satisfied when the observation matches the
    /// expectation.
    pub fn satisfied(&self) -> bool {
        match self.expectation {
            Expectation::Hold => self.observed_pass,
            Expectation::FailAsDocumented => !self.observed_pass,
        }
    }
}

/// A named collection of checks.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.checks.push(item);
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckItem::satisfied)
    }
}
