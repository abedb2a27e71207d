use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: ragged row at line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        path: PathBuf,
        line: u64,
        expected: usize,
        found: usize,
    },

    #[error("{path}: {message}")]
    CsvParse { path: PathBuf, message: String },

    #[error("duplicate column name '{name}'")]
    DuplicateColumn { name: String },

    #[error("column '{name}' not found in table '{table}'")]
    ColumnNotFound { table: String, name: String },

    #[error("column '{column}': expected {expected}, found {found}")]
    DtypeMismatch {
        column: String,
        expected: &'static str,
        found: &'static str,
    },

    #[error("column '{column}' has {len} values but table has {rows} rows")]
    ColumnLength {
        column: String,
        len: usize,
        rows: usize,
    },

    #[error("length mismatch in {what}: {left} vs {right}")]
    LengthMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("invalid pattern '{pattern}': {message}")]
    InvalidPattern { pattern: String, message: String },

    #[error("invalid date '{0}': expected YYYY-MM-DD")]
    InvalidDate(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("feature arity mismatch: tree expects {expected}, row has {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("cannot split {n} rows into non-empty train and test sides")]
    SplitTooSmall { n: usize },

    #[error("duplicate join key '{key}' in table '{table}'")]
    DuplicateKey { table: String, key: String },

    #[error("unknown dataset kind '{0}'")]
    UnknownKind(String),

    #[error("unknown spending category '{0}'")]
    UnknownCategory(String),

    #[error("{path}: not a CTBL1 cache file ({message})")]
    BadCache { path: PathBuf, message: String },

    #[error("keyword '{keyword}': {message}")]
    Keyword { keyword: String, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
