use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the input was violated (bad vertex id, loop in a
    /// simple graph, coloring of the wrong length, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A file or string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The request is well-formed but too large for the exhaustive routine.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An exact search ran out of its node or time budget.  `lower` is the
    /// best proven lower bound; `upper` is the best coloring found so far.
    #[error("budget exhausted: proven lower bound {lower}, best upper bound {upper:?}")]
    Budget { lower: u32, upper: Option<u32> },

    /// The requested decomposition method does not apply to this input.
    #[error("method not applicable: {0}")]
    Method(String),

    /// The constraint system has no solution.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An internal invariant failed.  Always a bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
