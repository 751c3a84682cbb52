use thiserror::Error;

/// Errors reported by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input graph is not simple or refers to vertices that do not exist.
    #[error("invalid graph: {0}")]
    Validation(String),

    /// A documented precondition of the called operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configured search or state limit was exceeded before an exact answer
    /// was reached.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Malformed graph6 or edge-list bytes.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
