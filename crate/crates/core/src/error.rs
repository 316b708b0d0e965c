use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid preset parameter: {0}")]
    InvalidParameter(String),

    #[error("group order exceeds cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("solution count sequence too short: need s(1..={needed}), have {have} terms")]
    InsufficientSequence { needed: usize, have: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    /// True for errors caused by bad user input, as opposed to a failed
    /// internal consistency check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Inconsistent(_))
    }
}
