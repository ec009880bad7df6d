use thiserror::Error;
use valued_field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error(transparent)]
    Field(#[from] FieldError),
}
