use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial has no trailing degree")]
    ZeroPolynomial,

    #[error("conductor mismatch: {0} vs {1} (embed into a common conductor first)")]
    ConductorMismatch(u32, u32),

    #[error("element of Q(zeta_{conductor}) is not rational: {detail}")]
    NotRational { conductor: u32, detail: String },

    #[error("matrix is not invertible")]
    Singular,

    #[error("group enumeration exceeded cap of {cap} elements")]
    EnumerationCap { cap: usize },

    #[error("{context}: expected {expected}, got {got}")]
    Consistency {
        context: String,
        expected: String,
        got: String,
    },

    #[error("bundle validation failed: {0}")]
    Validation(String),

    #[error("fingerprint ambiguity: columns {columns:?} share a fingerprint; add column_pins to the bundle")]
    FingerprintAmbiguity { columns: Vec<usize> },

    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },

    #[error("missing bundle: no {kind} bundle for group {group} under {dir}")]
    MissingBundle {
        group: String,
        kind: String,
        dir: String,
    },

    #[error("label universe mismatch between partitions")]
    LabelMismatch,

    #[error("coordinate dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
