use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structure of size {size} exceeds the size cap {cap} (raise it with --max-n or OPERAD_HOPF_MAX_N)")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("label mismatch: {0}")]
    LabelMismatch(String),
    #[error("label sets overlap: {0}")]
    LabelOverlap(String),
    #[error("species mismatch: expected {expected}, found {found}")]
    SpeciesMismatch { expected: String, found: String },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("decoration is not of the preferred-child form: {0}")]
    ShapeMismatch(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("composition requires a series without constant term")]
    NonDeltaComposition,
    #[error("series is not invertible under substitution (linear coefficient must be 1)")]
    NonInvertible,
    #[error("unknown type key {0}")]
    UnknownType(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("operation not supported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
