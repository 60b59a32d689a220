//! Error type shared across the crate.

/// Errors raised by instance validation, verification, construction
/// dispatch, and file handling.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Problem parameters outside the supported range (n < 2, k < 2, ...).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    /// Structurally broken assignment: out-of-range or duplicate proposal
    /// indices, unknown referees, and similar.
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    /// The requested construction does not apply to this (n, k) shape.
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    /// A specialty profile that does not map every proposal to an area.
    #[error("invalid specialty profile: {0}")]
    InvalidProfile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
