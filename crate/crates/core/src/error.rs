//! Error type shared by all solver modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Direct factorization of a linear system failed. When the failure can
    /// be attributed to a specific pivot (e.g. a structurally empty row or
    /// column), its index is reported.
    #[error("factorization failure{}", match .pivot { Some(p) => format!(" at pivot {p}"), None => String::new() })]
    FactorizationFailure { pivot: Option<usize> },

    /// The mesh lacks topological structure required by a solver
    /// (crack, cut paths, region tags, ...).
    #[error("topology error: {0}")]
    Topology(String),

    /// A text artifact (mesh file, scenario file) could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A comparison metric is undefined for the given inputs
    /// (e.g. relative difference against a zero reference).
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
