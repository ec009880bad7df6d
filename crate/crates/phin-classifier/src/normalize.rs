use exact_linalg::{intertwiner_space, Matrix, MatrixSpace, Vector};
use phin_core::{
    check_admissibility, invariant_families, standard_n, standard_phi, AdmissibilityReport,
    CoreError, FieldElement, JordanHint, PhiNModule, Shape, Violation,
};

use crate::ClassifyError;

/// A module's `(phi, N)` brought to standard form.
///
/// `transition` is the basis change `T` with `T phi T^-1 = phi_std` and
/// `T N T^-1 = n_std`; a subspace `U` of the input corresponds to `T U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub shape: Shape,
    /// The eigenvalue parameters of [`standard_phi`] for `shape`.
    pub eigen: Vec<FieldElement>,
    pub phi: Matrix,
    pub n: Matrix,
    pub transition: Matrix,
}

/// Brings a nilpotent `N` to the standard form of its rank: zero,
/// `e1 -> e3`, or the chain `e1 -> e2 -> e3`.
///
/// Returns `(n_std, T)` with `T N T^-1 = n_std`.
pub fn align_monodromy(n: &Matrix) -> Result<(Matrix, Matrix), ClassifyError> {
    let spec = n.spec();
    if !n.pow(3)?.is_zero() {
        return Err(CoreError::Invalid(vec![Violation::NotNilpotent]).into());
    }
    let rank = n.rank();
    let std = standard_n(spec, rank)?;
    let unit = |i: usize| exact_linalg::unit_vector(spec, 3, i);
    let first_with = |m: &Matrix| {
        (0..3)
            .map(unit)
            .find(|e| !is_zero(&m.apply(e).expect("3x3")))
    };
    let columns = match rank {
        0 => return Ok((std, Matrix::identity(spec, 3))),
        1 => {
            let f1 = first_with(n).expect("rank 1");
            let f3 = n.apply(&f1)?;
            let line = exact_linalg::Subspace::span(spec, 3, &[f3.clone()])?;
            let f2 = n
                .kernel()
                .into_iter()
                .find(|k| !line.contains_vector(k))
                .expect("the kernel of a rank-1 map on E^3 is a plane");
            vec![f1, f2, f3]
        }
        _ => {
            let f1 = first_with(&n.pow(2)?).expect("rank 2 nilpotent has N^2 != 0");
            let f2 = n.apply(&f1)?;
            let f3 = n.apply(&f2)?;
            vec![f1, f2, f3]
        }
    };
    let s = Matrix::from_columns(&columns)?;
    Ok((std, s.inverse()?))
}

fn is_zero(v: &Vector) -> bool {
    v.iter().all(FieldElement::is_zero)
}

fn triangular_diagonal(m: &Matrix) -> Option<Vec<FieldElement>> {
    let lower = (0..3).all(|i| (i + 1..3).all(|j| m.get(i, j).is_zero()));
    let upper = (0..3).all(|i| (0..i).all(|j| m.get(i, j).is_zero()));
    (lower || upper).then(|| (0..3).map(|i| m.get(i, i).clone()).collect())
}

fn rank_shifted(m: &Matrix, x: &FieldElement) -> usize {
    let shift = Matrix::identity(m.spec(), 3).scale(x);
    m.checked_sub(&shift).expect("3x3").rank()
}

/// The crystalline shape and standard eigenvalue list of `phi` from its
/// eigenvalues (with multiplicity, in any order).
fn crystalline_shape(phi: &Matrix, eigen: &[FieldElement]) -> (Shape, Vec<FieldElement>) {
    let mut distinct: Vec<(FieldElement, usize)> = Vec::new();
    for x in eigen {
        match distinct.iter_mut().find(|(y, _)| y == x) {
            Some((_, k)) => *k += 1,
            None => distinct.push((x.clone(), 1)),
        }
    }
    match distinct.len() {
        1 => {
            let lambda = distinct[0].0.clone();
            let shape = Shape::Crystalline(1 + rank_shifted(phi, &lambda) as u8);
            (shape, vec![lambda])
        }
        2 => {
            distinct.sort_by_key(|(_, k)| std::cmp::Reverse(*k));
            let (double, single) = (distinct[0].0.clone(), distinct[1].0.clone());
            let shape = if rank_shifted(phi, &double) == 1 {
                Shape::Crystalline(4)
            } else {
                Shape::Crystalline(5)
            };
            (shape, vec![double, single])
        }
        _ => (Shape::Crystalline(6), sort_eigenvalues(eigen.to_vec())),
    }
}

/// Decreasing valuation, ties broken by the total order on elements.
pub fn sort_eigenvalues(mut xs: Vec<FieldElement>) -> Vec<FieldElement> {
    xs.sort_by(|a, b| b.valuation().cmp(&a.valuation()).then_with(|| a.cmp(b)));
    xs
}

/// Brings `phi` to one of the twelve standard shapes while keeping the
/// standard `N` of rank `n_rank` fixed.
///
/// `phi` must already commute with the standard `N` as `N phi = p phi N`.
/// For `n_rank = 0` the eigenvalues are read from the hint if present, and
/// otherwise from the diagonal of a triangular `phi`.
pub fn normalize_phi(
    phi: &Matrix,
    n_rank: usize,
    hint: Option<&JordanHint>,
) -> Result<(Shape, Vec<FieldElement>, Matrix, Matrix), ClassifyError> {
    let spec = phi.spec();
    let p = FieldElement::from_int(spec, spec.prime() as i64);
    let (shape, eigen) = match n_rank {
        0 => {
            let eigen = match (hint, triangular_diagonal(phi)) {
                (Some(h), _) => h.eigenvalues.clone(),
                (None, Some(d)) => d,
                (None, None) => {
                    return Err(ClassifyError::Eigenvalues(
                        "phi is not triangular and no jordan hint was given".into(),
                    ))
                }
            };
            crystalline_shape(phi, &eigen)
        }
        1 => {
            let x = phi.get(2, 2).clone();
            let y = phi.get(1, 1).clone();
            let px = &p * &x;
            let shape = if y == x {
                Shape::RankOne(if rank_shifted(phi, &x) == 1 { 1 } else { 2 })
            } else if y == px {
                Shape::RankOne(if rank_shifted(phi, &px) == 1 { 3 } else { 4 })
            } else {
                Shape::RankOne(5)
            };
            let eigen = if shape == Shape::RankOne(5) {
                vec![x, y]
            } else {
                vec![x]
            };
            (shape, eigen)
        }
        2 => (Shape::RankTwo, vec![phi.get(2, 2).clone()]),
        k => {
            return Err(ClassifyError::Internal(format!(
                "N of rank {k} on a 3-dimensional space"
            )))
        }
    };
    let phi_std = standard_phi(shape, &eigen)?;
    let n_std = standard_n(spec, n_rank)?;
    let mut pairs = vec![(phi.clone(), phi_std.clone())];
    if n_rank > 0 {
        pairs.push((n_std.clone(), n_std));
    }
    let space = MatrixSpace::from_basis(spec, 3, 3, intertwiner_space(&pairs)?);
    let t = space.find_invertible().ok_or_else(|| {
        ClassifyError::Eigenvalues(format!(
            "phi is not conjugate to the {shape} form of its eigenvalues"
        ))
    })?;
    Ok((shape, eigen, phi_std, t))
}

/// Normal form of a validated module's `(phi, N)`.
pub fn normalize(m: &PhiNModule) -> Result<Normalized, ClassifyError> {
    let violations = m.validate();
    if !violations.is_empty() {
        return Err(CoreError::Invalid(violations).into());
    }
    let (n_std, t0) = align_monodromy(&m.n)?;
    let rank = m.n_rank();
    let phi_aligned = t0.conjugate(&m.phi)?;
    let hint = if rank == 0 { m.jordan.as_ref() } else { None };
    let (shape, eigen, phi_std, t1) = normalize_phi(&phi_aligned, rank, hint)?;
    Ok(Normalized {
        shape,
        eigen,
        phi: phi_std,
        n: n_std,
        transition: &t1 * &t0,
    })
}

/// Decides admissibility. A failure witness is expressed in the module's
/// own basis.
pub fn is_admissible(m: &PhiNModule) -> Result<AdmissibilityReport, ClassifyError> {
    let norm = normalize(m)?;
    let back = norm.transition.inverse()?;
    let families = invariant_families(&norm.phi, &norm.n, norm.shape)?
        .iter()
        .map(|f| f.transport(&back))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(check_admissibility(m, &families)?)
}
