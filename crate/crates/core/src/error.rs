use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Exhaustive enumeration would exceed the feasibility guard.
    #[error("capacity exceeded: {what} (pool {pool}, {combinations} candidate subsets, limit {limit})")]
    Capacity {
        what: String,
        pool: usize,
        combinations: u128,
        limit: u128,
    },

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// The requested (kind, r, engine) combination has no implementation.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
