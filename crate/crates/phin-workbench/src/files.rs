//! Module files: one JSON document in the `phin-core` schema per file.

use std::fs;
use std::path::Path;

use phin_core::{ModuleDoc, PhiNModule};

use crate::WorkbenchError;

/// Reads and validates a module file.
pub fn parse_module_file(path: impl AsRef<Path>) -> Result<PhiNModule, WorkbenchError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| WorkbenchError::Io { path: path.into(), source })?;
    parse_module_str(&text, &path.display().to_string())
}

/// Parses a module document; `origin` names it in error messages.
pub fn parse_module_str(text: &str, origin: &str) -> Result<PhiNModule, WorkbenchError> {
    let doc: ModuleDoc = serde_json::from_str(text).map_err(|e| WorkbenchError::parse(origin, &e))?;
    doc.to_module().map_err(|source| WorkbenchError::Document { path: origin.into(), source })
}

pub fn module_to_string(m: &PhiNModule) -> String {
    serde_json::to_string_pretty(&ModuleDoc::from_module(m)).expect("module documents serialize")
}

pub fn write_module_file(path: impl AsRef<Path>, m: &PhiNModule) -> Result<(), WorkbenchError> {
    let path = path.as_ref();
    fs::write(path, module_to_string(m) + "\n").map_err(|source| WorkbenchError::Io { path: path.into(), source })
}
