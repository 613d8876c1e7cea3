use thiserror::Error;

/// Errors raised while reading a Matrix Market file. Every variant that comes
/// from the input text names the 1-based line it was found on.
#[derive(Debug, Error)]
pub enum MatrixMarketError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: unsupported {what} `{value}`")]
    Unsupported {
        line: usize,
        what: &'static str,
        value: String,
    },
    #[error("line {line}: malformed size line")]
    MalformedSize { line: usize },
    #[error("line {line}: matrix is not square ({rows} x {cols})")]
    NotSquare {
        line: usize,
        rows: usize,
        cols: usize,
    },
    #[error("line {line}: malformed entry")]
    MalformedEntry { line: usize },
    #[error("line {line}: index ({row}, {col}) out of range for order {n}")]
    IndexOutOfRange {
        line: usize,
        row: usize,
        col: usize,
        n: usize,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    EntryCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("missing size line")]
    MissingSize,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sparse pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid sparse vector: {0}")]
    InvalidSparseVec(String),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires a non-empty sparse vector")]
    EmptyVector,
    #[error("value {value} at index {index} outside expected range [{lo}, {hi})")]
    ValueOutOfRange {
        index: usize,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    MatrixMarket(#[from] MatrixMarketError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
