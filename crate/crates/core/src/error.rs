use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,

    #[error("table has shape {rows}x{cols}, expected {n}x{n}")]
    Shape { n: usize, rows: usize, cols: usize },

    #[error("entry {value} at ({row}, {col}) lies outside the carrier of size {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("element {element} is not in the carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("skew brace axiom violated: {0}")]
    BraceAxiom(String),

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
