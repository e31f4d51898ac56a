use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty instance")]
    EmptyInstance,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("endpoint index {k} out of range 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },

    #[error("expected {expected} displacements, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("requires unique moving distance function")]
    NonUniformWeights,

    #[error("requires intervals of equal length")]
    NonUniformLengths,

    #[error("k = {k} is out of range for {n} intervals")]
    InvalidK { k: usize, n: usize },

    #[error("k-connectivity needs more than k vertices (k = {k}, n = {n})")]
    TooFewForConnectivity { k: usize, n: usize },

    #[error("collection must be sorted by center")]
    Unsorted,

    #[error("epsilon must be positive, got {0}")]
    InvalidEpsilon(f64),

    #[error("linear program is malformed: {0}")]
    MalformedProgram(String),

    #[error("linear program is {0}")]
    Unsolvable(&'static str),

    #[error("instance too large for oracle: {what} (n = {n}, cap = {cap})")]
    OracleCap { what: &'static str, n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
