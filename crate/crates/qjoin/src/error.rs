use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the operation's domain (bad size, missing edge, invalid partition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Operation restricted to simple graphs got a multigraph, or vice versa.
    #[error("mode error: {0}")]
    Mode(String),

    /// A stated precondition does not hold (non-equitable partition, reducible matrix, ...).
    #[error("precondition error: {0}")]
    Precondition(String),

    /// Input exceeds a built-in capability limit (canonical forms above n = 10, ...).
    #[error("capability error: {0}")]
    Capability(String),

    /// Malformed textual input; `offset` is the byte position of the problem.
    #[error("parse error at offset {offset}: {msg}")]
    Parse { msg: String, offset: usize },

    /// An iterative numeric routine failed to converge or a certified check failed.
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
