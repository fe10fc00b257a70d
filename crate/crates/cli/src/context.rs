use std::fmt;
use std::io::Read;

use sha2::{Digest, Sha256};

use crate::report::{InputDigest, Report};

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BOUND: u8 = 3;

/// Cap on tensor dimensions when `YBX_MAX_DIM` is unset.
pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, msg: msg.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<ybx_core::Error> for CliError {
    fn from(e: ybx_core::Error) -> Self {
        use ybx_core::Error as E;
        let code = match e {
            E::BoundExceeded { .. } => EXIT_BOUND,
            E::BraceAxiom(_) | E::Verification(_) | E::Precondition(_) => EXIT_CHECK_FAILED,
            E::EmptyCarrier
            | E::Shape { .. }
            | E::EntryOutOfRange { .. }
            | E::ElementOutOfRange { .. }
            | E::InvalidGroup(_)
            | E::Dimension { .. }
            | E::Parse { .. } => EXIT_USAGE,
        };
        CliError { code, msg: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command produced: a file-format artifact or a verification report.
pub enum Outcome {
    Artifact(String),
    Report(Report),
}

pub struct Ctx {
    pub json: bool,
    pub timed: bool,
    pub max_dim: usize,
    pub argv: Vec<String>,
    inputs: Vec<InputDigest>,
}

impl Ctx {
    pub fn new(json: bool, timed: bool, argv: Vec<String>) -> CliResult<Self> {
        let max_dim = match std::env::var("YBX_MAX_DIM") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("YBX_MAX_DIM must be a positive integer, got `{v}`")))?,
            Err(_) => DEFAULT_MAX_DIM,
        };
        Ok(Ctx { json, timed, max_dim, argv, inputs: Vec::new() })
    }

    /// Reads a file argument; `-` is stdin. The digest goes into the report.
    pub fn read(&mut self, path: &str) -> CliResult<String> {
        let mut bytes = Vec::new();
        let res = if path == "-" {
            std::io::stdin().read_to_end(&mut bytes).map(|_| ())
        } else {
            std::fs::read(path).map(|b| bytes = b)
        };
        res.map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
        let digest = Sha256::digest(&bytes);
        self.inputs.push(InputDigest {
            path: path.to_owned(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        });
        String::from_utf8(bytes).map_err(|_| CliError::usage(format!("{path} is not UTF-8")))
    }

    /// Refuses work whose tensor dimension exceeds the configured cap.
    pub fn check_dim(&self, what: &str, dim: Option<usize>) -> CliResult<usize> {
        match dim {
            Some(d) if d <= self.max_dim => Ok(d),
            _ => Err(CliError {
                code: EXIT_BOUND,
                msg: format!(
                    "{what} dimension {} exceeds YBX_MAX_DIM = {}",
                    dim.map_or("overflow".to_owned(), |d| d.to_string()),
                    self.max_dim
                ),
            }),
        }
    }

    pub fn report(&self) -> Report {
        Report::new(self.argv.clone(), self.inputs.clone(), self.timed)
    }
}

/// `n^k`, `None` on overflow.
pub fn power(n: usize, k: u32) -> Option<usize> {
    n.checked_pow(k)
}
