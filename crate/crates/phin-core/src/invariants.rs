use exact_linalg::{LinalgError, Matrix, Subspace};
use valued_field::{Valuation, Q64};

use crate::{CoreError, Filtration, HodgeType};

/// `t_H(U) = s dim(U ∩ L1) + r (dim(U ∩ L2) - dim(U ∩ L1))`.
pub fn hodge_invariant(u: &Subspace, fil: &Filtration, h: HodgeType) -> Result<Q64, CoreError> {
    let d1 = u.intersect(&fil.l1)?.dim() as i64;
    let d2 = u.intersect(&fil.l2)?.dim() as i64;
    Ok(Q64::from_integer(h.s * d1 + h.r * (d2 - d1)))
}

/// `t_N(U) = v(det phi|_U)`; the zero subspace has invariant 0.
pub fn newton_invariant(u: &Subspace, phi: &Matrix) -> Result<Q64, CoreError> {
    if u.dim() == 0 {
        return Ok(Q64::from_integer(0));
    }
    let restricted = u.restrict(phi).map_err(|e| match e {
        LinalgError::NotInvariant => CoreError::NotPhiInvariant,
        other => other.into(),
    })?;
    match restricted.determinant()?.valuation() {
        Valuation::Finite(v) => Ok(v),
        Valuation::Infinite => Err(CoreError::Shape("phi is singular on the subspace".into())),
    }
}
