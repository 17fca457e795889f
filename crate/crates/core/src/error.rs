use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed matrix or graph file. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown row label {0}")]
    UnknownRow(usize),

    #[error("unknown column label {0}")]
    UnknownColumn(usize),

    #[error("unknown vertex label {0}")]
    UnknownVertex(usize),

    /// A caller-supplied value is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A brute-force oracle refused an input beyond its size guard.
    #[error("oracle refused input: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
