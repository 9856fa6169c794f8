use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search limit exceeded: {0}")]
    Limit(String),

    #[error("internal consistency check failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
