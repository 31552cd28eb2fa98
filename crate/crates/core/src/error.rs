use thiserror::Error;

use crate::scalar::Backend;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("backend mismatch")]
    BackendMismatch { left: Backend, right: Backend },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear map is singular")]
    SingularMap,

    #[error("f is not an α-fixed point")]
    NotFixedPoint,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("catalog entry `{entry}` has no parameter `{name}`")]
    UnknownParameter { entry: String, name: String },

    #[error("catalog entry `{entry}` needs a value for parameter `{name}`")]
    MissingParameter { entry: String, name: String },

    #[error("invalid scalar `{text}`: {reason}")]
    InvalidScalar { text: String, reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
