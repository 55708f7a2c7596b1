use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not unit triangular: {0}")]
    NotUnitTriangular(String),

    #[error("matrix is singular (determinant 0)")]
    Singular,

    #[error("Fibonacci index must be at least 1, got {0}")]
    FibIndex(i64),

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: String,
        lo: String,
        hi: String,
    },

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("no invertible matrix found within {attempts} samples")]
    SearchExhausted { attempts: u64 },
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl ToString,
        lo: impl ToString,
        hi: impl ToString,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
            lo: lo.to_string(),
            hi: hi.to_string(),
        }
    }
}
