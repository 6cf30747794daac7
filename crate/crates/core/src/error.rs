use thiserror::Error;

/// Errors raised by group construction, analysis and the theorem checkers.
///
/// `Disagreement` and `Internal` indicate a bug (two independent computations
/// of the same fact gave different answers). `Falsified` means a checked
/// consequence did not hold on the given input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cross-path disagreement in {check}: {detail}")]
    Disagreement { check: String, detail: String },

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn disagreement(check: &str, detail: impl Into<String>) -> Self {
        Error::Disagreement {
            check: check.to_string(),
            detail: detail.into(),
        }
    }

    /// True for budget errors, which callers treat as "skip" rather than failure.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
