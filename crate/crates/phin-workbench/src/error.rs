use std::path::PathBuf;

use phin_classifier::ClassifyError;
use phin_core::{CoreError, DocError};
use phin_iso::IsoError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed JSON, located by line and column.
    #[error("{path}:{line}:{column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    /// Well-formed JSON whose content does not describe a valid module.
    #[error("{path}: {source}")]
    Document { path: String, source: DocError },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl WorkbenchError {
    pub(crate) fn parse(path: &str, e: &serde_json::Error) -> Self {
        WorkbenchError::Parse { path: path.into(), line: e.line(), column: e.column(), msg: e.to_string() }
    }
}
