use thiserror::Error;

use crate::group::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("dominance comparison needs equal weights, got {0} and {1}")]
    IncomparableWeights(usize, usize),

    #[error("color count mismatch: expected {expected}, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("content has {content} entries but the shape has {cells} cells")]
    ContentSizeMismatch { content: usize, cells: usize },

    #[error("{vars} variables cannot faithfully realize degree {degree}")]
    InsufficientVariables { vars: usize, degree: usize },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("malformed group: {0}")]
    MalformedGroup(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group validation failed: {0}")]
    ValidationFailed(ValidationReport),

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    ContainmentViolated { outer: String, inner: String },

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag, used by the CLI's JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::IncomparableWeights(..) => "IncomparableWeights",
            Error::ColorCountMismatch { .. } => "ColorCountMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::MalformedFilling(_) => "MalformedFilling",
            Error::ContentSizeMismatch { .. } => "ContentSizeMismatch",
            Error::InsufficientVariables { .. } => "InsufficientVariables",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::MalformedGroup(_) => "MalformedGroup",
            Error::UnknownGroup(_) => "UnknownGroup",
            Error::Parse(_) => "ParseError",
            Error::ValidationFailed(_) => "ValidationFailed",
            Error::GroupMismatch => "GroupMismatch",
            Error::ContainmentViolated { .. } => "ContainmentViolated",
            Error::WeightMismatch(..) => "WeightMismatch",
            Error::Internal(_) => "InternalError",
            Error::Io(_) => "IoError",
            Error::Json(_) => "ParseError",
        }
    }
}
