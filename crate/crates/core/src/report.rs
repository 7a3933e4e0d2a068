//! Pass/fail bookkeeping for the verification sweeps.

use std::fmt;

/// One falsified instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub indices: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: expected {}, got {}",
            self.identity, self.indices, self.expected, self.actual
        )
    }
}

/// Outcome of a named group of checks.
///
/// Every individual comparison bumps `checks`; falsified ones are recorded in
/// `failures` in the order they were found, so the first entry is the first
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<Failure>,
    /// Informational lines that are neither passes nor failures.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Records an equality check.
    pub fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        identity: &str,
        indices: impl fmt::Display,
        expected: &T,
        actual: &T,
    ) {
        self.checks += 1;
        if expected != actual {
            self.failures.push(Failure {
                identity: identity.to_string(),
                indices: indices.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records a boolean check; `detail` is only evaluated on failure.
    pub fn expect(
        &mut self,
        ok: bool,
        identity: &str,
        indices: impl fmt::Display,
        detail: impl FnOnce() -> (String, String),
    ) {
        self.checks += 1;
        if !ok {
            let (expected, actual) = detail();
            self.failures.push(Failure {
                identity: identity.to_string(),
                indices: indices.to_string(),
                expected,
                actual,
            });
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Folds another report's counts, failures and notes into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} checks, {} failures)",
            self.name,
            self.checks,
            self.failures.len()
        )
    }
}
