use thiserror::Error;

/// Errors raised by the laboratory's operations.
///
/// The variants line up with the command-line exit codes: contract
/// violations map to 2, size limits to 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation's precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An input exceeds a configured oracle cap.
    #[error("size limit exceeded: {what} is {got}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// No deletion set can satisfy the family (e.g. it forbids a single vertex).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The caller broke a documented contract (non-monotone predicate, wrong regime).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A construction failed its own verification.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn size(what: &'static str, got: usize, cap: usize) -> Self {
        Error::SizeLimit { what, got, cap }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
