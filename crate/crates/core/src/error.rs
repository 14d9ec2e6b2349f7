use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size argument is zero, above a documented limit, or two inputs disagree on `n`.
    #[error("size error: {0}")]
    Size(String),
    /// Input data does not describe a valid object (crossing partition, bad profile, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// The operation is undefined for this (otherwise valid) input.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a computational budget.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn size_mismatch(a: usize, b: usize) -> Error {
    Error::Size(format!("orders differ: {a} vs {b}"))
}

/// `n = 0` is a size error; `n` above an exhaustive-search limit is a
/// resource error.
pub(crate) fn check_limit(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::Size(format!("{what} needs n >= 1")))
    } else if n > max {
        Err(Error::Resource(format!("{what} supports n <= {max}, got {n}")))
    } else {
        Ok(())
    }
}
