use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed code at line {line}, column {column}: {reason}")]
    MalformedCode {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("signed code has no embedding in the sphere (genus {genus})")]
    NotRealizable { genus: i64 },
    #[error("invalid curve map: {0}")]
    InvalidMap(String),
    #[error("invalid singular site: {0}")]
    InvalidSite(String),
    #[error("invalid symbol `{0}`")]
    BadSymbol(String),
    #[error("assertion failed: {0}")]
    AssertionFailure(String),
    #[error("crossing type ({a},{b}) has inconsistent adjacent labels {first:?} vs {second:?}")]
    InconsistentTable {
        a: i64,
        b: i64,
        first: [i64; 4],
        second: [i64; 4],
    },
    #[error("relation {relation} fails at indices {indices:?}")]
    RelationFailure { relation: String, indices: Vec<i64> },
}
