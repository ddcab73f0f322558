use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },

    /// Inputs that collapse an operation (e.g. a = b where a mean slope
    /// is undefined).
    #[error("degenerate input in {op}: {message}")]
    Degenerate { op: &'static str, message: String },

    /// Registry lookup with an id that does not exist.
    #[error("unknown inequality id `{0}`")]
    UnknownId(String),

    /// A stated precondition (order restriction, range) was violated.
    #[error("precondition violated in {op}: {message}")]
    Precondition { op: &'static str, message: String },

    /// Malformed or out-of-domain scan region.
    #[error("invalid region: {0}")]
    Region(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(op: &'static str, message: impl Into<String>) -> Error {
        Error::Domain {
            op,
            message: message.into(),
        }
    }

    pub fn degenerate(op: &'static str, message: impl Into<String>) -> Error {
        Error::Degenerate {
            op,
            message: message.into(),
        }
    }

    pub fn precondition(op: &'static str, message: impl Into<String>) -> Error {
        Error::Precondition {
            op,
            message: message.into(),
        }
    }
}
