use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside the documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// Input violates a mathematical precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration guard tripped before the computation would blow up.
    #[error("resource guard exceeded: {0}")]
    Resource(String),

    /// Exact arithmetic produced a value that contradicts a theorem the
    /// pipeline relies on; signals a bug upstream, not bad user input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// Malformed graph or polynomial input data.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
