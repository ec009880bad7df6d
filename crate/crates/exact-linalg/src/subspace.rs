use std::fmt;

use valued_field::{FieldElement, FieldSpec};

use crate::reduce::{nullspace, rref};
use crate::{LinalgError, Matrix, Vector};

/// A subspace of `E^n`, stored by its reduced echelon basis.
///
/// Basis vector `i` has a 1 in coordinate `pivots[i]` and every other basis
/// vector vanishes there. This form is unique, so the derived equality and
/// hash are equality and hash of subspaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    spec: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of `vectors` inside `E^ambient`.
    pub fn span(spec: FieldSpec, ambient: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} in E^{ambient}",
                v.len()
            )));
        }
        if vectors.iter().flatten().any(|x| x.spec() != spec) {
            return Err(LinalgError::Dimension("vectors from a different field".into()));
        }
        let mut rows = vectors.to_vec();
        let pivots = rref(&mut rows);
        Ok(Self {
            spec,
            ambient,
            basis: rows,
            pivots,
        })
    }

    pub fn zero(spec: FieldSpec, ambient: usize) -> Self {
        Self {
            spec,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(spec: FieldSpec, ambient: usize) -> Self {
        let basis: Vec<Vector> = (0..ambient)
            .map(|i| crate::unit_vector(spec, ambient, i))
            .collect();
        Self::span(spec, ambient, &basis).expect("standard basis")
    }

    /// The span of the standard basis vectors with the given zero-based
    /// indices.
    pub fn coordinate(spec: FieldSpec, ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices
            .iter()
            .map(|&i| crate::unit_vector(spec, ambient, i))
            .collect();
        Self::span(spec, ambient, &vs).expect("standard basis vectors")
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let coords: Vec<FieldElement> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = &*r - &(c * x);
                }
            }
        }
        residual.iter().all(FieldElement::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.spec, self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut eqs = self.annihilator();
        eqs.extend(other.annihilator());
        let vs = nullspace(&eqs, self.ambient, &FieldElement::zero(self.spec));
        Self::span(self.spec, self.ambient, &vs)
    }

    /// Linear functionals (as row vectors) cutting out this subspace: `v`
    /// lies in the subspace iff `f . v = 0` for every returned `f`.
    pub fn annihilator(&self) -> Vec<Vector> {
        nullspace(&self.basis, self.ambient, &FieldElement::zero(self.spec))
    }

    /// The image `m(U)`.
    pub fn image(&self, m: &Matrix) -> Result<Self, LinalgError> {
        let vs = self
            .basis
            .iter()
            .map(|b| m.apply(b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::span(self.spec, m.rows(), &vs)
    }

    pub fn is_invariant(&self, m: &Matrix) -> Result<bool, LinalgError> {
        Ok(self.contains(&self.image(m)?)?)
    }

    /// The matrix of `m` restricted to this subspace, in the echelon basis.
    pub fn restrict(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        let k = self.dim();
        if k == 0 {
            return Err(LinalgError::Dimension("restriction to the zero subspace".into()));
        }
        let mut cols = Vec::with_capacity(k);
        for b in &self.basis {
            let img = m.apply(b)?;
            cols.push(self.coordinates(&img).ok_or(LinalgError::NotInvariant)?);
        }
        Matrix::from_columns(&cols)
    }

    /// The matrix of the operator induced by `m` on `E^n / U`, in the basis
    /// given by the standard vectors at the non-pivot coordinates.
    pub fn quotient_operator(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        if !self.is_invariant(m)? {
            return Err(LinalgError::NotInvariant);
        }
        let free: Vec<usize> = (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect();
        if free.is_empty() {
            return Err(LinalgError::Dimension("quotient by the whole space".into()));
        }
        let cols: Vec<Vector> = free
            .iter()
            .map(|&j| {
                let img = m.column(j);
                let reduced = self.reduce(&img);
                free.iter().map(|&i| reduced[i].clone()).collect()
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// `v` minus its component along the echelon basis, which leaves zeros
    /// at every pivot coordinate.
    pub fn reduce(&self, v: &[FieldElement]) -> Vector {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = &*r - &(&c * x);
                }
            }
        }
        out
    }

    pub fn encode(&self) -> Vec<Vec<Vec<String>>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(FieldElement::encode).collect())
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient || self.spec != other.spec {
            return Err(LinalgError::Dimension(format!(
                "subspaces of E^{} and E^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        f.write_str("E(")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_vector(v))?;
        }
        f.write_str(")")
    }
}

/// Formats a vector as a combination of `e1, e2, ...`.
pub(crate) fn format_vector(v: &[FieldElement]) -> String {
    let mut out = String::new();
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if x.is_one() {
            out.push_str(&format!("e{}", i + 1));
        } else {
            out.push_str(&format!("({x})e{}", i + 1));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int_vector;

    fn s() -> FieldSpec {
        FieldSpec::default()
    }

    fn sp(vs: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = vs.iter().map(|v| int_vector(s(), v)).collect();
        Subspace::span(s(), 3, &vs).unwrap()
    }

    #[test]
    fn echelon_examples() {
        assert_eq!(sp(&[&[1, 0, 0], &[2, 0, 0]]), sp(&[&[1, 0, 0]]));
        let u = sp(&[&[0, 1, 0], &[0, 1, 1]]);
        assert_eq!(u, Subspace::coordinate(s(), 3, &[1, 2]));
        assert_eq!(u.dim(), 2);
        assert_eq!(
            sp(&[&[1, 1, 0], &[1, -1, 0], &[2, 0, 0]]),
            Subspace::coordinate(s(), 3, &[0, 1])
        );
    }

    #[test]
    fn lattice_examples() {
        let e12 = Subspace::coordinate(s(), 3, &[0, 1]);
        let e23 = Subspace::coordinate(s(), 3, &[1, 2]);
        let e2 = Subspace::coordinate(s(), 3, &[1]);
        assert_eq!(e12.intersect(&e23).unwrap(), e2);
        assert!(e23.contains(&e2).unwrap());
        assert_eq!(sp(&[&[1, 0, 1], &[0, 1, 0]]).intersect(&e23).unwrap(), e2);
        assert_eq!(e12.sum(&e23).unwrap(), Subspace::full(s(), 3));
    }

    #[test]
    fn restriction_and_quotient() {
        let m = Matrix::from_ints(s(), &[&[2, 0, 0], &[1, 2, 0], &[0, 0, 5]]);
        let e12 = Subspace::coordinate(s(), 3, &[0, 1]);
        let r = e12.restrict(&m).unwrap();
        assert_eq!(r.determinant().unwrap(), FieldElement::from_int(s(), 4));
        let q = e12.quotient_operator(&m).unwrap();
        assert_eq!(q.determinant().unwrap(), FieldElement::from_int(s(), 5));
        let e13 = Subspace::coordinate(s(), 3, &[0, 2]);
        assert_eq!(e13.restrict(&m), Err(LinalgError::NotInvariant));
    }
}
