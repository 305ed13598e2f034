use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A register size outside the supported range (1..=24 qubits).
    #[error("capacity: {0}")]
    Capacity(String),

    /// An argument violated a precondition (bad index, shape, range, ...).
    #[error("validation: {0}")]
    Validation(String),

    /// A statevector that does not have the structure a decoder requires.
    #[error("malformed state: {0}")]
    MalformedState(String),

    /// Problems assembling a dataset from disk or from the generator.
    #[error("dataset: {0}")]
    Dataset(String),

    /// A train/validation split that cannot be satisfied.
    #[error("split: {0}")]
    Split(String),

    /// Training produced a non-finite loss.
    #[error("training diverged at epoch {epoch}: loss is not finite")]
    DivergedTraining { epoch: usize },

    /// An image file that could not be read or decoded.
    #[error("image {path}: {reason}")]
    Image { path: PathBuf, reason: String },

    /// A malformed run configuration or model file.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
