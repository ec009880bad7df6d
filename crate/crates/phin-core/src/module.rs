use std::fmt;

use exact_linalg::{Matrix, Subspace};
use valued_field::{FieldElement, FieldSpec};

use crate::CoreError;

/// Hodge type `(0, r, s)`; valid only when `0 < r < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HodgeType {
    pub r: i64,
    pub s: i64,
}

impl HodgeType {
    pub fn new(r: i64, s: i64) -> Self {
        HodgeType { r, s }
    }

    pub fn is_valid(&self) -> bool {
        0 < self.r && self.r < self.s
    }

    /// `r + s`, the Hodge invariant of the whole module.
    pub fn total(&self) -> i64 {
        self.r + self.s
    }
}

impl fmt::Display for HodgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0,{},{})", self.r, self.s)
    }
}

/// The flag `L1 ⊂ L2` carrying the two nontrivial filtration steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filtration {
    pub l1: Subspace,
    pub l2: Subspace,
}

impl Filtration {
    pub fn new(l1: Subspace, l2: Subspace) -> Self {
        Filtration { l1, l2 }
    }

    /// Image of the flag under an invertible matrix.
    pub fn transport(&self, q: &Matrix) -> Result<Self, CoreError> {
        Ok(Filtration { l1: self.l1.image(q)?, l2: self.l2.image(q)? })
    }
}

/// Eigenvalue data for a Frobenius matrix that is not already triangular.
///
/// `eigenvalues` lists the roots of the characteristic polynomial with
/// multiplicity. When `change_of_basis` is present, its columns form a basis
/// in which `phi` is lower triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanHint {
    pub eigenvalues: Vec<FieldElement>,
    pub change_of_basis: Option<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiNModule {
    pub field: FieldSpec,
    pub hodge: HodgeType,
    pub phi: Matrix,
    pub n: Matrix,
    pub fil: Filtration,
    pub jordan: Option<JordanHint>,
}

/// A broken module invariant, as reported by [`PhiNModule::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    HodgeOrder { r: i64, s: i64 },
    MatrixShape { name: &'static str, rows: usize, cols: usize },
    FieldMismatch { name: &'static str },
    PhiSingular,
    NotNilpotent,
    MonodromyRelation,
    FiltrationDim { name: &'static str, expected: usize, found: usize },
    FiltrationNotNested,
    HintLength { found: usize },
    HintCharpoly,
    HintBasis(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HodgeOrder { r, s } => {
                write!(f, "Hodge type requires 0<r<s (got r={r}, s={s})")
            }
            Violation::MatrixShape { name, rows, cols } => {
                write!(f, "{name} must be 3x3 (got {rows}x{cols})")
            }
            Violation::FieldMismatch { name } => write!(f, "{name} is over a different field"),
            Violation::PhiSingular => write!(f, "phi is not invertible"),
            Violation::NotNilpotent => write!(f, "N not nilpotent (N^3 != 0)"),
            Violation::MonodromyRelation => write!(f, "N phi != p phi N"),
            Violation::FiltrationDim { name, expected, found } => {
                write!(f, "{name} must have dimension {expected} (got {found})")
            }
            Violation::FiltrationNotNested => write!(f, "Fil^s is not contained in Fil^r"),
            Violation::HintLength { found } => {
                write!(f, "jordan hint must list 3 eigenvalues (got {found})")
            }
            Violation::HintCharpoly => {
                write!(f, "jordan hint eigenvalues are not the roots of the characteristic polynomial")
            }
            Violation::HintBasis(msg) => write!(f, "jordan hint change of basis: {msg}"),
        }
    }
}

impl PhiNModule {
    /// Builds a module and rejects it unless [`validate`](Self::validate) is clean.
    pub fn new(
        field: FieldSpec,
        hodge: HodgeType,
        phi: Matrix,
        n: Matrix,
        fil: Filtration,
        jordan: Option<JordanHint>,
    ) -> Result<Self, CoreError> {
        let m = PhiNModule { field, hodge, phi, n, fil, jordan };
        let violations = m.validate();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(CoreError::Invalid(violations))
        }
    }

    /// Every violated invariant; empty means the module is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !self.hodge.is_valid() {
            out.push(Violation::HodgeOrder { r: self.hodge.r, s: self.hodge.s });
        }
        let mut shapes_ok = true;
        for (name, m) in [("phi", &self.phi), ("N", &self.n)] {
            if m.rows() != 3 || m.cols() != 3 {
                out.push(Violation::MatrixShape { name, rows: m.rows(), cols: m.cols() });
                shapes_ok = false;
            } else if m.spec() != self.field {
                out.push(Violation::FieldMismatch { name });
                shapes_ok = false;
            }
        }
        if shapes_ok {
            if self.phi.determinant().map(|d| d.is_zero()).unwrap_or(true) {
                out.push(Violation::PhiSingular);
            }
            if !self.n.pow(3).map(|m| m.is_zero()).unwrap_or(false) {
                out.push(Violation::NotNilpotent);
            }
            let p = FieldElement::from_int(self.field, i64::from(self.field.prime()));
            let lhs = &self.n * &self.phi;
            let rhs = (&self.phi * &self.n).scale(&p);
            if lhs != rhs {
                out.push(Violation::MonodromyRelation);
            }
        }
        let mut fil_ok = true;
        for (name, sub, k) in [("Fil^s", &self.fil.l1, 1), ("Fil^r", &self.fil.l2, 2)] {
            if sub.spec() != self.field {
                out.push(Violation::FieldMismatch { name });
                fil_ok = false;
            } else if sub.ambient_dim() != 3 || sub.dim() != k {
                out.push(Violation::FiltrationDim { name, expected: k, found: sub.dim() });
                fil_ok = false;
            }
        }
        if fil_ok && !self.fil.l2.contains(&self.fil.l1).unwrap_or(false) {
            out.push(Violation::FiltrationNotNested);
        }
        if let (Some(hint), true) = (&self.jordan, shapes_ok) {
            out.extend(self.validate_hint(hint));
        }
        out
    }

    fn validate_hint(&self, hint: &JordanHint) -> Vec<Violation> {
        let mut out = Vec::new();
        if hint.eigenvalues.len() != 3 {
            out.push(Violation::HintLength { found: hint.eigenvalues.len() });
            return out;
        }
        if hint.eigenvalues.iter().any(|x| x.spec() != self.field) {
            out.push(Violation::FieldMismatch { name: "jordan eigenvalues" });
            return out;
        }
        if charpoly(&self.phi) != symmetric(&hint.eigenvalues) {
            out.push(Violation::HintCharpoly);
        }
        if let Some(c) = &hint.change_of_basis {
            if c.rows() != 3 || c.cols() != 3 || c.spec() != self.field {
                out.push(Violation::HintBasis("must be a 3x3 matrix over the module field".into()));
            } else {
                match c.inverse() {
                    Err(_) => out.push(Violation::HintBasis("not invertible".into())),
                    Ok(ci) => {
                        let t = &(&ci * &self.phi) * c;
                        let upper_zero = (0..3).all(|i| (i + 1..3).all(|j| t.get(i, j).is_zero()));
                        if !upper_zero {
                            out.push(Violation::HintBasis("does not triangularize phi".into()));
                        }
                    }
                }
            }
        }
        out
    }

    /// The same module written in the basis `q e_1, q e_2, q e_3`, i.e. with
    /// `phi` and `N` conjugated by `q` and the flag moved by `q`.
    pub fn transport(&self, q: &Matrix) -> Result<Self, CoreError> {
        let jordan = self.jordan.as_ref().map(|h| JordanHint {
            eigenvalues: h.eigenvalues.clone(),
            change_of_basis: h.change_of_basis.as_ref().map(|c| q * c),
        });
        Ok(PhiNModule {
            field: self.field,
            hodge: self.hodge,
            phi: q.conjugate(&self.phi)?,
            n: q.conjugate(&self.n)?,
            fil: self.fil.transport(q)?,
            jordan,
        })
    }

    pub fn n_rank(&self) -> usize {
        self.n.rank()
    }
}

/// `(tr, e2, det)` of a 3x3 matrix: the coefficients of its characteristic
/// polynomial up to sign.
pub(crate) fn charpoly(m: &Matrix) -> [FieldElement; 3] {
    let g = |i, j| m.get(i, j);
    let tr = g(0, 0) + g(1, 1) + g(2, 2);
    let minor = |a: usize, b: usize| g(a, a) * g(b, b) - g(a, b) * g(b, a);
    let e2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = m.determinant().expect("square");
    [tr, e2, det]
}

pub(crate) fn symmetric(xs: &[FieldElement]) -> [FieldElement; 3] {
    let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
    [a + b + c, a * b + a * c + b * c, &(a * b) * c]
}
