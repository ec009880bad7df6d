use thiserror::Error;

use crate::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(i64),
    #[error("ramification index must be at least 1, got {0}")]
    BadRamification(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    SpecMismatch { left: FieldSpec, right: FieldSpec },
    #[error("expected {expected} coefficients, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
