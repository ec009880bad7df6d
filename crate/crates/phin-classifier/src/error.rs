use exact_linalg::LinalgError;
use phin_core::{AdmissibilityReport, CoreError, DocError};
use thiserror::Error;
use valued_field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{id}: {}", .violations.join("; "))]
    Constraint { id: String, violations: Vec<String> },
    #[error("eigenvalues unavailable: {0}")]
    Eigenvalues(String),
    #[error("module is not admissible")]
    NotAdmissible(Box<AdmissibilityReport>),
    #[error("no catalog family matches the module ({0})")]
    NoFamilyMatch(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Doc(#[from] DocError),
}

impl From<LinalgError> for ClassifyError {
    fn from(e: LinalgError) -> Self {
        ClassifyError::Core(e.into())
    }
}

impl From<FieldError> for ClassifyError {
    fn from(e: FieldError) -> Self {
        ClassifyError::Core(e.into())
    }
}
