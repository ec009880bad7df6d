//! The JSON document form of a module.
//!
//! ```json
//! {
//!   "field": {"prime": 2, "ramification": 6},
//!   "hodge": {"r": 1, "s": 2},
//!   "phi": [[..], [..], [..]],
//!   "N": [[..], [..], [..]],
//!   "fil_s": [v],
//!   "fil_r": [v, v],
//!   "jordan": {"eigenvalues": [..], "change_of_basis": [[..], [..], [..]]}
//! }
//! ```
//!
//! Matrices are lists of rows and vectors are lists of entries. An entry is
//! either the full coefficient list `["a0", .., "a(e-1)"]` of `Σ a_i u^i`, a
//! single rational string such as `"3/2"`, or an integer. `jordan` and its
//! `change_of_basis` may be omitted.

use exact_linalg::{Matrix, Subspace, Vector};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use valued_field::{FieldElement, FieldError, FieldSpec};

use crate::{CoreError, Filtration, HodgeType, JordanHint, PhiNModule};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDoc {
    Coeffs(Vec<String>),
    Rational(String),
    Int(i64),
}

pub type VectorDoc = Vec<ElementDoc>;
pub type MatrixDoc = Vec<Vec<ElementDoc>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub prime: i64,
    pub ramification: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDoc {
    pub r: i64,
    pub s: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanDoc {
    pub eigenvalues: VectorDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub change_of_basis: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub field: FieldDoc,
    pub hodge: HodgeDoc,
    pub phi: MatrixDoc,
    #[serde(rename = "N")]
    pub n: MatrixDoc,
    pub fil_s: Vec<VectorDoc>,
    pub fil_r: Vec<VectorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<JordanDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("{path}: {source}")]
    Entry { path: String, source: FieldError },
    #[error("{path}: {msg}")]
    Shape { path: String, msg: String },
    #[error("field: {0}")]
    Field(FieldError),
    #[error(transparent)]
    Module(#[from] CoreError),
}

impl ElementDoc {
    pub fn from_element(x: &FieldElement) -> Self {
        ElementDoc::Coeffs(x.encode())
    }

    pub fn to_element(&self, spec: FieldSpec) -> Result<FieldElement, FieldError> {
        match self {
            ElementDoc::Coeffs(parts) => FieldElement::decode(spec, parts),
            ElementDoc::Rational(q) => {
                let mut parts = vec!["0".to_string(); spec.degree()];
                parts[0] = q.clone();
                FieldElement::decode(spec, &parts)
            }
            ElementDoc::Int(n) => Ok(FieldElement::from_int(spec, *n)),
        }
    }
}

fn vector_doc(v: &[FieldElement]) -> VectorDoc {
    v.iter().map(ElementDoc::from_element).collect()
}

/// The row-list form of a matrix.
pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    m.row_vectors().iter().map(|r| vector_doc(r)).collect()
}

fn parse_vector(spec: FieldSpec, v: &[ElementDoc], len: usize, path: &str) -> Result<Vector, DocError> {
    if v.len() != len {
        return Err(DocError::Shape { path: path.into(), msg: format!("expected {len} entries, found {}", v.len()) });
    }
    v.iter()
        .enumerate()
        .map(|(i, x)| {
            x.to_element(spec).map_err(|source| DocError::Entry { path: format!("{path}[{i}]"), source })
        })
        .collect()
}

/// Parses a `3x3` matrix; `path` names it in error messages.
pub fn parse_matrix(spec: FieldSpec, m: &MatrixDoc, path: &str) -> Result<Matrix, DocError> {
    if m.len() != 3 {
        return Err(DocError::Shape { path: path.into(), msg: format!("expected 3 rows, found {}", m.len()) });
    }
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(spec, r, 3, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).expect("3x3 rows"))
}

fn parse_span(spec: FieldSpec, vs: &[VectorDoc], path: &str) -> Result<Subspace, DocError> {
    let vs = vs
        .iter()
        .enumerate()
        .map(|(i, v)| parse_vector(spec, v, 3, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::span(spec, 3, &vs).expect("3-dimensional vectors"))
}

impl ModuleDoc {
    pub fn from_module(m: &PhiNModule) -> Self {
        ModuleDoc {
            field: FieldDoc {
                prime: i64::from(m.field.prime()),
                ramification: i64::from(m.field.ramification()),
            },
            hodge: HodgeDoc { r: m.hodge.r, s: m.hodge.s },
            phi: matrix_doc(&m.phi),
            n: matrix_doc(&m.n),
            fil_s: m.fil.l1.basis().iter().map(|v| vector_doc(v)).collect(),
            fil_r: m.fil.l2.basis().iter().map(|v| vector_doc(v)).collect(),
            jordan: m.jordan.as_ref().map(|h| JordanDoc {
                eigenvalues: vector_doc(&h.eigenvalues),
                change_of_basis: h.change_of_basis.as_ref().map(matrix_doc),
            }),
        }
    }

    /// Parses the entries without checking the module invariants.
    pub fn to_module_unchecked(&self) -> Result<PhiNModule, DocError> {
        let spec = FieldSpec::new(self.field.prime, self.field.ramification).map_err(DocError::Field)?;
        let jordan = match &self.jordan {
            None => None,
            Some(j) => Some(JordanHint {
                eigenvalues: parse_vector(spec, &j.eigenvalues, j.eigenvalues.len(), "jordan.eigenvalues")?,
                change_of_basis: match &j.change_of_basis {
                    None => None,
                    Some(c) => Some(parse_matrix(spec, c, "jordan.change_of_basis")?),
                },
            }),
        };
        Ok(PhiNModule {
            field: spec,
            hodge: HodgeType::new(self.hodge.r, self.hodge.s),
            phi: parse_matrix(spec, &self.phi, "phi")?,
            n: parse_matrix(spec, &self.n, "N")?,
            fil: Filtration::new(parse_span(spec, &self.fil_s, "fil_s")?, parse_span(spec, &self.fil_r, "fil_r")?),
            jordan,
        })
    }

    /// Parses and validates.
    pub fn to_module(&self) -> Result<PhiNModule, DocError> {
        let m = self.to_module_unchecked()?;
        let violations = m.validate();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(CoreError::Invalid(violations).into())
        }
    }
}
