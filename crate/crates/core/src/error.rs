use thiserror::Error;

/// Errors raised by construction, enumeration and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} is not supported (expected at most {max})", max = crate::polycore::MAX_GROUND)]
    GroundSize(usize),

    #[error("rank table for n = {n} must have {expected} entries, got {got}")]
    TableLength { n: usize, expected: usize, got: usize },

    #[error("invalid rank function: {0}")]
    InvalidRank(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed instance: {0}")]
    Instance(String),

    #[error("budget of {limit} exceeded while {what}")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("polynomial is not divisible by x + y - 1 (remainder {remainder})")]
    NotDivisible { remainder: String },

    /// A proved structural property failed. Only reachable with an invalid
    /// rank table or an internal bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
