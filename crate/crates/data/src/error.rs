use thiserror::Error;

/// Failure modes of dataset loading and screening.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DataError {
    #[error("file not found: {path}")]
    FileNotFound { path: String },

    #[error("I/O error reading {path}: {message}")]
    Io { path: String, message: String },

    /// The header row does not resolve all required columns; lists the
    /// canonical names that stayed unmatched.
    #[error("header is missing required columns: {}", missing.join(", "))]
    HeaderMismatch { missing: Vec<String> },

    /// Two header cells resolve to the same canonical column.
    #[error("column {name} appears more than once in the header")]
    DuplicateColumn { name: String },

    /// Blank cell. Rows are counted from zero, excluding the header.
    #[error("missing value at data row {row}, column {column}")]
    MissingValue { row: usize, column: String },

    #[error("cannot parse {content:?} at data row {row}, column {column}")]
    ParseError {
        row: usize,
        column: String,
        content: String,
    },

    #[error("row {row} has {got} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("no column named {name}")]
    UnknownColumn { name: String },

    #[error("columns must be nonempty and of equal length")]
    ColumnLengthMismatch,

    #[error("threshold probability must lie in (0, 1), got {value}")]
    InvalidThreshold { value: f64 },

    /// The sample covariance of the selected columns is not positive
    /// definite, so Mahalanobis distances are undefined.
    #[error("sample covariance is singular")]
    SingularCovariance,
}
