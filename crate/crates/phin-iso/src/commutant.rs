use std::fmt;

use exact_linalg::{intertwiner_space, Matrix, MatrixSpace};
use phin_core::{standard_n, standard_phi, FieldElement, FieldSpec, Shape};
use thiserror::Error;

/// A linear condition on the entries of `P`, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Zero(usize, usize),
    Equal((usize, usize), (usize, usize)),
}

impl Constraint {
    fn holds(self, p: &Matrix) -> bool {
        match self {
            Constraint::Zero(i, j) => p.get(i, j).is_zero(),
            Constraint::Equal((i, j), (k, l)) => p.get(i, j) == p.get(k, l),
        }
    }

    fn residual(self, p: &Matrix) -> FieldElement {
        match self {
            Constraint::Zero(i, j) => p.get(i, j).clone(),
            Constraint::Equal((i, j), (k, l)) => p.get(i, j) - p.get(k, l),
        }
    }
}

/// One-based, as entries are usually written.
impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::Zero(i, j) => write!(f, "P{}{} = 0", i + 1, j + 1),
            Constraint::Equal((i, j), (k, l)) => {
                write!(f, "P{}{} = P{}{}", i + 1, j + 1, k + 1, l + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantReport {
    pub shape: Shape,
    pub dim: usize,
    /// For `cris-6`, the eigenvalue permutations whose intertwiners were
    /// checked to be the matching permutation pattern.
    pub permutations_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("commutant of {shape}: {detail}")]
pub struct CommutantMismatch {
    pub shape: Shape,
    pub detail: String,
}

const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// The expected entry pattern of the matrices commuting with the standard
/// `(phi, N)` of `shape`, and the dimension of that space.
pub fn template(shape: Shape) -> (Vec<Constraint>, usize) {
    use Constraint::*;
    let zeros = |idx: &[(usize, usize)]| idx.iter().map(|&(i, j)| Zero(i, j)).collect::<Vec<_>>();
    let diag_eq = |pairs: &[(usize, usize)]| {
        pairs
            .iter()
            .map(|&(i, j)| Equal((i, i), (j, j)))
            .collect::<Vec<_>>()
    };
    let (z, e, dim) = match shape {
        Shape::Crystalline(1) => (vec![], vec![], 9),
        Shape::Crystalline(2) => (zeros(&[(0, 1), (0, 2), (2, 1)]), diag_eq(&[(0, 1)]), 5),
        Shape::Crystalline(3) => {
            let mut e = diag_eq(&[(0, 1), (1, 2)]);
            e.push(Equal((1, 0), (2, 1)));
            (zeros(&[(0, 1), (0, 2), (1, 2)]), e, 3)
        }
        Shape::Crystalline(4) => (zeros(&[(0, 2), (1, 2), (2, 0), (2, 1)]), vec![], 5),
        Shape::Crystalline(5) => (
            zeros(&[(0, 1), (0, 2), (1, 2), (2, 0), (2, 1)]),
            diag_eq(&[(0, 1)]),
            3,
        ),
        Shape::Crystalline(_) => (zeros(&OFF_DIAGONAL), vec![], 3),
        Shape::RankOne(1) => (
            zeros(&[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0)]),
            diag_eq(&[(0, 2)]),
            3,
        ),
        Shape::RankOne(2) => (
            zeros(&[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0)]),
            diag_eq(&[(0, 1), (1, 2)]),
            2,
        ),
        Shape::RankOne(3) => (
            zeros(&[(0, 1), (0, 2), (1, 2), (2, 0), (2, 1)]),
            diag_eq(&[(0, 2)]),
            3,
        ),
        Shape::RankOne(4) => (
            zeros(&[(0, 1), (0, 2), (1, 2), (2, 0), (2, 1)]),
            diag_eq(&[(0, 1), (1, 2)]),
            2,
        ),
        Shape::RankOne(_) => (zeros(&OFF_DIAGONAL), diag_eq(&[(0, 2)]), 2),
        Shape::RankTwo => (zeros(&OFF_DIAGONAL), diag_eq(&[(0, 1), (1, 2)]), 1),
    };
    ([z, e].concat(), dim)
}

/// Runs [`commutant_shape_check_with`] on fixed eigenvalues `3, 5, 7`.
pub fn commutant_shape_check(shape: Shape) -> Result<CommutantReport, CommutantMismatch> {
    let spec = FieldSpec::default();
    let eigen: Vec<FieldElement> = [3, 5, 7][..shape.eigen_arity()]
        .iter()
        .map(|&x| FieldElement::from_int(spec, x))
        .collect();
    commutant_shape_check_with(shape, &eigen)
}

/// Computes the commutant of the standard pair by brute force and compares
/// it with [`template`]: every element must satisfy every constraint, and
/// the dimensions must agree, which forces the two spaces to coincide.
pub fn commutant_shape_check_with(
    shape: Shape,
    eigen: &[FieldElement],
) -> Result<CommutantReport, CommutantMismatch> {
    let (constraints, dim) = template(shape);
    compare(shape, eigen, &constraints, dim)
}

fn compare(
    shape: Shape,
    eigen: &[FieldElement],
    constraints: &[Constraint],
    dim: usize,
) -> Result<CommutantReport, CommutantMismatch> {
    let fail = |detail: String| CommutantMismatch { shape, detail };
    let phi = standard_phi(shape, eigen).map_err(|e| fail(e.to_string()))?;
    let spec = phi.spec();
    let n = standard_n(spec, shape.n_rank()).map_err(|e| fail(e.to_string()))?;
    let basis = intertwiner_space(&[(phi.clone(), phi.clone()), (n.clone(), n)])
        .map_err(|e| fail(e.to_string()))?;
    for c in constraints {
        if let Some(p) = basis.iter().find(|p| !c.holds(p)) {
            return Err(fail(format!(
                "{c} fails for a commuting matrix with P = {p}"
            )));
        }
    }
    if basis.len() != dim {
        return Err(fail(format!(
            "dimension {} but the template expects {dim}",
            basis.len()
        )));
    }
    let pattern = MatrixSpace::full(spec, 3, 3)
        .constrain(|p| Ok(constraints.iter().map(|c| c.residual(p)).collect()))
        .map_err(|e| fail(e.to_string()))?;
    if pattern.dim() != dim {
        return Err(fail(format!(
            "the template's constraints cut out dimension {}",
            pattern.dim()
        )));
    }
    let permutations_checked = if shape == Shape::Crystalline(6) {
        check_permutations(shape, eigen)?
    } else {
        0
    };
    Ok(CommutantReport {
        shape,
        dim,
        permutations_checked,
    })
}

/// With distinct eigenvalues, the intertwiners from `diag(λ1, λ2, λ3)` to
/// `diag(λσ(1), λσ(2), λσ(3))` are exactly the matrices supported on the
/// entries `(i, σ(i))`.
fn check_permutations(shape: Shape, eigen: &[FieldElement]) -> Result<usize, CommutantMismatch> {
    let fail = |detail: String| CommutantMismatch { shape, detail };
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let a = Matrix::diag(eigen);
    for sigma in perms {
        let b = Matrix::diag(&sigma.map(|i| eigen[i].clone()));
        let zero = Matrix::zeros(a.spec(), 3, 3);
        let basis = intertwiner_space(&[(a.clone(), b), (zero.clone(), zero)])
            .map_err(|e| fail(e.to_string()))?;
        let off_pattern =
            |p: &Matrix| (0..3).any(|i| (0..3).any(|j| j != sigma[i] && !p.get(i, j).is_zero()));
        if basis.len() != 3 || basis.iter().any(off_pattern) {
            return Err(fail(format!("intertwiners for the eigenvalue permutation {sigma:?} are not its permutation pattern")));
        }
    }
    Ok(perms.len())
}
