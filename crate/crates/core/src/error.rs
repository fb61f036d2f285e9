use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: point has dimension {got}, expected {expected}")]
    Dimension {
        line: usize,
        got: usize,
        expected: usize,
    },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter {name}: {msg}")]
    InvalidParameter { name: &'static str, msg: String },

    #[error("graph is disconnected; split into components first")]
    Disconnected,

    #[error("vertex {vertex} has distance {value} not covered by any interval")]
    CoverGap { vertex: usize, value: f64 },

    #[error("nerve edge joins two clusters on the same interval {interval}")]
    EqualIntervals { interval: usize },

    #[error("input has {n} points, above the size guard of {guard}; subsample first")]
    SizeGuard { n: usize, guard: usize },

    #[error("no valid pairs: {0}")]
    NoPairs(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid graph JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
