//! Error type shared across the crate.

use thiserror::Error;

/// All failure modes of the library, grouped by pipeline stage.
#[derive(Debug, Error)]
pub enum Error {
    // ---- input / parsing ----
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("{path}: row {row}, column {col}: {msg}")]
    Parse {
        path: String,
        row: usize,
        col: usize,
        msg: String,
    },
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("unknown class label {0:?} (expected H, M, or N)")]
    UnknownLabel(String),
    #[error("referenced file does not exist: {0}")]
    MissingFile(String),
    #[error("duplicate path in manifest: {0}")]
    DuplicatePath(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("feature matrix schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    // ---- preprocessing ----
    #[error("moving-average window length must be odd and >= 1, got {0}")]
    InvalidWindowLen(usize),
    #[error("cutoff {cutoff_hz} Hz violates the Nyquist limit for {sampling_rate} Hz sampling")]
    NyquistViolation { cutoff_hz: f64, sampling_rate: f64 },
    #[error("unsupported filter order {0} (supported range 1..=8)")]
    UnsupportedOrder(usize),
    #[error("series of length {len} too short for zero-phase filtering (need >= {min})")]
    SeriesTooShort { len: usize, min: usize },
    #[error("window length {window_len} exceeds series length {series_len}")]
    WindowTooLong {
        window_len: usize,
        series_len: usize,
    },

    // ---- graphs / features ----
    #[error("node index {node} out of range for graph of {node_count} nodes")]
    BadNode { node: usize, node_count: usize },
    #[error("feature row has no class label (row {0})")]
    UnlabeledRow(usize),
    #[error("ANOVA requires at least 2 groups, found {0}")]
    TooFewGroups(usize),
    #[error("no rows with label {0}")]
    EmptyGroup(String),
    #[error("invalid k = {k}: {msg}")]
    BadK { k: usize, msg: String },

    // ---- classification ----
    #[error("class {label} has {count} members, fewer than {k} folds")]
    ClassTooSmall {
        label: String,
        count: usize,
        k: usize,
    },
    #[error("training data contains a single class; need at least two")]
    SingleClass,
    #[error("invalid model specification: {0}")]
    BadSpec(String),
    #[error("confusion matrix has no observations")]
    EmptyMatrix,

    // ---- pipeline / config ----
    #[error("config error: key {key}: {msg}")]
    Config { key: String, msg: String },
}

impl Error {
    /// Process exit code for the CLI: 1 = config error, 2 = data error,
    /// 3 = internal error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 1,
            Error::BadNode { .. } => 3,
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
