use exact_linalg::LinalgError;
use thiserror::Error;
use valued_field::FieldError;

use crate::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("invalid module: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("{0}")]
    Shape(String),
    #[error("family check failed: {0}")]
    Family(String),
    #[error("subspace is not phi-invariant")]
    NotPhiInvariant,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
