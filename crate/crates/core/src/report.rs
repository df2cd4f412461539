//! Verification reports: named checks with case counts and a first witness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// A single yes/no fact.
    pub fn single(name: impl Into<String>, ok: bool, case: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            cases: 1,
            failures: usize::from(!ok),
            witness: (!ok).then(|| Witness {
                case: case.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }),
        }
    }

    /// Run `f` over every case in parallel; `f` returns a witness on failure.
    /// The reported witness is the first failing case in input order.
    pub fn run<C: Sync>(name: impl Into<String>, cases: &[C], f: impl Fn(&C) -> Option<Witness> + Sync) -> Check {
        let results: Vec<Option<Witness>> = cases.par_iter().map(&f).collect();
        let failures = results.iter().filter(|w| w.is_some()).count();
        Check {
            name: name.into(),
            cases: cases.len(),
            failures,
            witness: results.into_iter().flatten().next(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn total_cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  {mark} {} ({} cases, {} failures)", c.name, c.cases, c.failures)?;
            if let Some(w) = &c.witness {
                writeln!(f, "    at {}: {} != {}", w.case, w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}
