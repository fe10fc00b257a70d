use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use ybx_core::{Check, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Set on identities verified only in the fundamental representation.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub representation_level_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<CheckEntry>,
    pub info: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
    #[serde(skip)]
    timed: bool,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Vec<InputDigest>, timed: bool) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            checks: Vec::new(),
            info: BTreeMap::new(),
            seconds: None,
            timed,
            started: Some(Instant::now()),
        }
    }

    pub fn info(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.info.insert(key.to_owned(), value.into());
    }

    fn secs(&self, d: Duration) -> Option<f64> {
        self.timed.then(|| (d.as_secs_f64() * 1e6).round() / 1e6)
    }

    pub fn push_verdict(&mut self, name: &str, verdict: Verdict, elapsed: Duration, rep_only: bool) {
        let (status, witness) = match verdict {
            Verdict::Pass => (Status::Pass, None),
            Verdict::Fail { witness } => (Status::Fail, Some(witness)),
        };
        self.checks.push(CheckEntry {
            name: name.to_owned(),
            status,
            witness,
            representation_level_only: rep_only,
            seconds: self.secs(elapsed),
        });
    }

    /// Runs `f` and records its verdict with the elapsed time.
    pub fn run<E>(&mut self, name: &str, rep_only: bool, f: impl FnOnce() -> Result<Verdict, E>) -> Result<(), E> {
        let start = Instant::now();
        let v = f()?;
        self.push_verdict(name, v, start.elapsed(), rep_only);
        Ok(())
    }

    /// Records a batch of checks that were computed together.
    pub fn push_checks(&mut self, checks: Vec<Check>, elapsed: Duration, rep_only: bool) {
        let share = elapsed / checks.len().max(1) as u32;
        for c in checks {
            self.push_verdict(&c.name, c.verdict, share, rep_only);
        }
    }

    pub fn skip(&mut self, name: &str, reason: &str) {
        self.checks.push(CheckEntry {
            name: name.to_owned(),
            status: Status::Skipped,
            witness: Some(reason.to_owned()),
            representation_level_only: false,
            seconds: None,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn finish(&mut self) {
        if let Some(start) = self.started.take() {
            self.seconds = self.secs(start.elapsed());
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(out, "{tag}  {}", c.name);
            if let Some(w) = &c.witness {
                let _ = write!(out, ": {w}");
            }
            if c.representation_level_only {
                out.push_str(" [representation level]");
            }
            if let Some(s) = c.seconds {
                let _ = write!(out, " ({s:.3}s)");
            }
            out.push('\n');
        }
        for (k, v) in &self.info {
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    }
}
