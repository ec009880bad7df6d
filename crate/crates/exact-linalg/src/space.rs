use valued_field::{FieldElement, FieldSpec};

use crate::reduce::nullspace;
use crate::{LinalgError, Matrix, SmallSupportPoints, Subspace, Vector};

/// A linear space of `rows x cols` matrices, given by a basis.
///
/// Conditions are imposed with [`MatrixSpace::constrain`] and its
/// specializations; each returns the subspace where the condition holds,
/// with a basis expressed in terms of the previous one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpace {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    basis: Vec<Matrix>,
}

impl MatrixSpace {
    /// All matrices, with the elementary matrices in row-major order as basis.
    pub fn full(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        let basis = (0..rows * cols)
            .map(|k| {
                let mut m = Matrix::zeros(spec, rows, cols);
                m.set(k / cols, k % cols, FieldElement::one(spec));
                m
            })
            .collect();
        Self {
            spec,
            rows,
            cols,
            basis,
        }
    }

    pub fn from_basis(spec: FieldSpec, rows: usize, cols: usize, basis: Vec<Matrix>) -> Self {
        Self {
            spec,
            rows,
            cols,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Matrix> {
        self.basis
    }

    /// The kernel of a linear map `f` from matrices to `E^k`.
    ///
    /// `f` must be linear; it is only evaluated on basis elements.
    pub fn constrain(
        &self,
        f: impl Fn(&Matrix) -> Result<Vector, LinalgError>,
    ) -> Result<Self, LinalgError> {
        let images = self.basis.iter().map(&f).collect::<Result<Vec<_>, _>>()?;
        let k = images.first().map_or(0, Vec::len);
        if k == 0 || self.basis.is_empty() {
            return Ok(self.clone());
        }
        let rows: Vec<Vector> = (0..k)
            .map(|i| images.iter().map(|img| img[i].clone()).collect())
            .collect();
        let kernel = nullspace(&rows, self.dim(), &FieldElement::zero(self.spec));
        let basis = kernel.iter().map(|c| self.combine(c)).collect();
        Ok(Self {
            basis,
            ..self.clone()
        })
    }

    /// The subspace of `P` with `P * a = b * P`.
    pub fn intertwining(&self, a: &Matrix, b: &Matrix) -> Result<Self, LinalgError> {
        if a.rows() != self.cols || a.cols() != self.cols || b.rows() != self.rows || b.cols() != self.rows {
            return Err(LinalgError::Dimension("intertwining operators of the wrong size".into()));
        }
        self.constrain(|p| Ok(p.checked_mul(a)?.checked_sub(&b.checked_mul(p)?)?.entries().to_vec()))
    }

    /// The subspace of `P` with `P * x` in `w`.
    pub fn mapping_vector_into(&self, x: &[FieldElement], w: &Subspace) -> Result<Self, LinalgError> {
        let ann = w.annihilator();
        if ann.is_empty() {
            return Ok(self.clone());
        }
        self.constrain(|p| {
            let y = p.apply(x)?;
            Ok(ann.iter().map(|f| crate::dot(f, &y)).collect())
        })
    }

    /// The subspace of `P` with `P(u)` contained in `w`.
    pub fn mapping_into(&self, u: &Subspace, w: &Subspace) -> Result<Self, LinalgError> {
        u.basis()
            .iter()
            .try_fold(self.clone(), |acc, x| acc.mapping_vector_into(x, w))
    }

    /// `sum_i c_i B_i`.
    pub fn combine(&self, coeffs: &[FieldElement]) -> Matrix {
        assert_eq!(coeffs.len(), self.dim(), "wrong number of coordinates");
        let mut acc = vec![FieldElement::zero(self.spec); self.rows * self.cols];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (a, x) in acc.iter_mut().zip(b.entries()) {
                if x.is_zero() {
                    continue;
                }
                let t = if c.is_one() { x.clone() } else { x * c };
                *a = if a.is_zero() { t } else { &*a + &t };
            }
        }
        Matrix::from_fn(self.spec, self.rows, self.cols, |i, j| acc[i * self.cols + j].clone())
    }

    pub fn combine_ints(&self, coeffs: &[i64]) -> Matrix {
        let cs: Vec<FieldElement> = coeffs
            .iter()
            .map(|&c| FieldElement::from_int(self.spec, c))
            .collect();
        self.combine(&cs)
    }

    /// The first small-support sample point (see [`SmallSupportPoints`])
    /// whose matrix passes `accept`.
    ///
    /// When `accept(P)` means "a polynomial of total degree at most `degree`
    /// in the coordinates of `P` is nonzero", a `None` result proves the
    /// polynomial vanishes on the whole space.
    pub fn find_point(&self, degree: usize, mut accept: impl FnMut(&Matrix) -> bool) -> Option<Matrix> {
        SmallSupportPoints::new(self.dim(), degree)
            .map(|c| self.combine_ints(&c))
            .find(|m| accept(m))
    }

    /// An invertible element, or `None` if every element is singular.
    ///
    /// The determinant has total degree `n` in the coordinates, so the
    /// search is exhaustive by the small-support argument.
    pub fn find_invertible(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "invertibility of non-square matrices");
        let invertible = |m: &Matrix| !m.determinant().expect("square").is_zero();
        // Invertible elements of the spaces met in practice usually need every
        // basis element, which the small-support order reaches last, so one
        // dense point, with distinct prime coordinates, goes first.
        let dense: Vec<i64> = (2..).filter(|&n: &i64| (2..n).all(|d| n % d != 0)).take(self.dim()).collect();
        let all = self.combine_ints(&dense);
        if self.dim() > 0 && invertible(&all) {
            return Some(all);
        }
        self.find_point(self.rows, invertible)
    }
}

/// A basis of `{P : P * A_i = B_i * P for all i}`.
pub fn intertwiner_space(pairs: &[(Matrix, Matrix)]) -> Result<Vec<Matrix>, LinalgError> {
    let Some((a0, b0)) = pairs.first() else {
        return Err(LinalgError::Dimension("no operator pairs given".into()));
    };
    let mut space = MatrixSpace::full(a0.spec(), b0.rows(), a0.cols());
    for (a, b) in pairs {
        space = space.intertwining(a, b)?;
    }
    Ok(space.into_basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> FieldSpec {
        FieldSpec::default()
    }

    #[test]
    fn commutant_of_a_jordan_block() {
        // phi e1 = 3e1 + e2, phi e2 = 3e2 + e3, phi e3 = 3e3.
        let phi = Matrix::from_ints(s(), &[&[3, 0, 0], &[1, 3, 0], &[0, 1, 3]]);
        let basis = intertwiner_space(&[(phi.clone(), phi)]).unwrap();
        assert_eq!(basis.len(), 3);
        for p in &basis {
            assert_eq!(p.get(0, 0), p.get(1, 1));
            assert_eq!(p.get(1, 1), p.get(2, 2));
            assert_eq!(p.get(1, 0), p.get(2, 1));
            assert!(p.get(0, 1).is_zero() && p.get(0, 2).is_zero() && p.get(1, 2).is_zero());
        }
    }

    #[test]
    fn invertible_search() {
        let space = MatrixSpace::full(s(), 2, 2);
        assert!(space.find_invertible().is_some());
        // strictly upper triangular 2x2 matrices are all singular
        let nil = MatrixSpace::full(s(), 2, 2)
            .constrain(|p| Ok(vec![p.get(0, 0).clone(), p.get(1, 0).clone(), p.get(1, 1).clone()]))
            .unwrap();
        assert_eq!(nil.dim(), 1);
        assert!(nil.find_invertible().is_none());
    }

    #[test]
    fn subspace_conditions() {
        let e1 = crate::unit_vector(s(), 3, 0);
        let line = Subspace::coordinate(s(), 3, &[0]);
        let space = MatrixSpace::full(s(), 3, 3).mapping_vector_into(&e1, &line).unwrap();
        assert_eq!(space.dim(), 7);
    }
}
