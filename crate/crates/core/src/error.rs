use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relations contain a cycle through {0:?}")]
    Cycle(Vec<usize>),

    #[error("element {element} out of range for a poset of {len} elements")]
    OutOfRange { element: usize, len: usize },

    #[error("{0}")]
    Domain(String),

    /// A precondition of the form "P is d-complete" did not hold, or an
    /// internal consistency check on a constructed object failed.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("enumeration cap of {0} linear extensions exceeded")]
    CapExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
