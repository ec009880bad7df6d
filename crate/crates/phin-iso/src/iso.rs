use exact_linalg::{intertwiner_space, LinalgError, Matrix, MatrixSpace};
use phin_core::{matrix_doc, CoreError, MatrixDoc, PhiNModule, Violation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("{which} module is invalid: {}", .violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid {
        which: &'static str,
        violations: Vec<Violation>,
    },
    #[error("the modules are over different fields")]
    FieldMismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// An isomorphism `P` from one module to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub p: Matrix,
}

impl IsoWitness {
    /// Checks the four defining conditions and invertibility exactly.
    pub fn verify(&self, a: &PhiNModule, b: &PhiNModule) -> bool {
        let p = &self.p;
        let intertwines = |x: &Matrix, y: &Matrix| p * x == y * p;
        let invertible = p.determinant().map(|d| !d.is_zero()).unwrap_or(false);
        invertible
            && a.hodge == b.hodge
            && intertwines(&a.phi, &b.phi)
            && intertwines(&a.n, &b.n)
            && a.fil.transport(p).map(|f| f == b.fil).unwrap_or(false)
    }

    pub fn to_doc(&self) -> MatrixDoc {
        matrix_doc(&self.p)
    }
}

/// Every `P`, invertible or not, with `P phi_a = phi_b P`, `P N_a = N_b P`,
/// `P(L1_a) ⊆ L1_b` and `P(L2_a) ⊆ L2_b`.
pub fn isomorphism_space(a: &PhiNModule, b: &PhiNModule) -> Result<MatrixSpace, IsoError> {
    for (which, m) in [("first", a), ("second", b)] {
        let violations = m.validate();
        if !violations.is_empty() {
            return Err(IsoError::Invalid { which, violations });
        }
    }
    if a.field != b.field {
        return Err(IsoError::FieldMismatch);
    }
    let basis = intertwiner_space(&[(a.phi.clone(), b.phi.clone()), (a.n.clone(), b.n.clone())])?;
    Ok(MatrixSpace::from_basis(a.field, 3, 3, basis)
        .mapping_into(&a.fil.l1, &b.fil.l1)?
        .mapping_into(&a.fil.l2, &b.fil.l2)?)
}

/// An isomorphism `a -> b`, or `None` if there is none.
///
/// An invertible `P` maps each `L_i` onto a space of the same dimension,
/// so containment already gives equality. Modules of different Hodge types
/// are never isomorphic. When the identity qualifies it is the witness;
/// otherwise the witness is the first grid point of the solution space
/// with nonzero determinant, which makes the answer reproducible.
pub fn are_isomorphic(a: &PhiNModule, b: &PhiNModule) -> Result<Option<IsoWitness>, IsoError> {
    let space = isomorphism_space(a, b)?;
    if a.hodge != b.hodge {
        return Ok(None);
    }
    let identity = IsoWitness {
        p: Matrix::identity(a.field, 3),
    };
    if identity.verify(a, b) {
        return Ok(Some(identity));
    }
    let Some(p) = space.find_invertible() else {
        return Ok(None);
    };
    let witness = IsoWitness { p };
    assert!(
        witness.verify(a, b),
        "invertible point of the isomorphism space fails verification"
    );
    Ok(Some(witness))
}
