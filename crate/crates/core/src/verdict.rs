//! Outcomes of exhaustive checks.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
}

impl Verdict {
    pub fn fail(witness: impl fmt::Display) -> Self {
        Verdict::Fail {
            witness: witness.to_string(),
        }
    }

    /// Pass when `witness` is `None`.
    pub fn from_witness<W: fmt::Display>(witness: Option<W>) -> Self {
        witness.map_or(Verdict::Pass, Verdict::fail)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness } => Some(witness),
        }
    }

    /// The first failure of `self` and `next`.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.is_pass() {
            next()
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail { witness } => write!(f, "FAIL ({witness})"),
        }
    }
}

/// A named verdict, as listed in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        Check {
            name: name.into(),
            verdict,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.verdict.is_pass())
}
