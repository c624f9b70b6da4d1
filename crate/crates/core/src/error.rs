use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("argument out of range: {0}")]
    Domain(String),

    #[error("{what} = {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("internal arithmetic invariant violated: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
