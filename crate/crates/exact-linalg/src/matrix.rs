use std::fmt;
use std::ops::{Add, Mul, Sub};

use valued_field::{FieldElement, FieldSpec};

use crate::reduce::{nullspace, rref};
use crate::{LinalgError, Vector};

/// A dense `rows x cols` matrix over `E`, stored row-major.
///
/// Entry `(i, j)` of the matrix of an operator `T` is the coefficient of
/// `e_i` in `T(e_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            spec,
            rows,
            cols,
            data: vec![FieldElement::zero(spec); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        Self::from_fn(spec, n, n, |i, j| {
            if i == j {
                FieldElement::one(spec)
            } else {
                FieldElement::zero(spec)
            }
        })
    }

    pub fn diag(entries: &[FieldElement]) -> Self {
        let spec = entries[0].spec();
        let n = entries.len();
        Self::from_fn(spec, n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                FieldElement::zero(spec)
            }
        })
    }

    pub fn from_fn(
        spec: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            spec,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(LinalgError::Dimension("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        let spec = rows[0][0].spec();
        let data: Vec<FieldElement> = rows.into_iter().flatten().collect();
        if data.iter().any(|x| x.spec() != spec) {
            return Err(LinalgError::Dimension("entries from different fields".into()));
        }
        Ok(Self {
            spec,
            rows: r,
            cols: c,
            data,
        })
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Result<Self, LinalgError> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    /// A matrix with small integer entries, given row by row.
    pub fn from_ints(spec: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| crate::int_vector(spec, r)).collect())
            .expect("well-formed integer matrix")
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.spec, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self {
            spec: self.spec,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a + b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a - b))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        self.check_field(rhs.spec)?;
        let zero = FieldElement::zero(self.spec);
        let mut out = vec![zero; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out[i * rhs.cols + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(Self {
            spec: self.spec,
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[FieldElement]) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| crate::dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self, LinalgError> {
        self.require_square()?;
        let mut acc = Self::identity(self.spec, self.rows);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref(&mut rows).len()
    }

    /// A basis of the kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        nullspace(&self.row_vectors(), self.cols, &FieldElement::zero(self.spec))
    }

    /// Exact determinant. Cofactor expansion for `n <= 3`, elimination
    /// otherwise.
    pub fn determinant(&self) -> Result<FieldElement, LinalgError> {
        self.require_square()?;
        let g = |i, j| self.get(i, j);
        Ok(match self.rows {
            1 => g(0, 0).clone(),
            2 => g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0),
            3 => {
                let m0 = g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1);
                let m1 = g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0);
                let m2 = g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0);
                g(0, 0) * &m0 - g(0, 1) * &m1 + g(0, 2) * &m2
            }
            _ => self.determinant_by_elimination(),
        })
    }

    fn determinant_by_elimination(&self) -> FieldElement {
        let n = self.rows;
        let mut m = self.row_vectors();
        let mut det = FieldElement::one(self.spec);
        for c in 0..n {
            let Some(k) = (c..n).find(|&k| !m[k][c].is_zero()) else {
                return FieldElement::zero(self.spec);
            };
            if k != c {
                m.swap(k, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inv().expect("nonzero pivot");
            for k in c + 1..n {
                if m[k][c].is_zero() {
                    continue;
                }
                let f = &m[k][c] * &inv;
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[k][j] = &m[k][j] - &t;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        self.require_square()?;
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend(crate::unit_vector(self.spec, n, i));
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Self::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// `self * x * self^{-1}`, the matrix of `x` after the basis change
    /// whose transition matrix is `self`.
    pub fn conjugate(&self, x: &Matrix) -> Result<Self, LinalgError> {
        self.checked_mul(x)?.checked_mul(&self.inverse()?)
    }

    /// Nested text encoding: rows of field-element encodings.
    pub fn encode(&self) -> Vec<Vec<Vec<String>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).encode()).collect())
            .collect()
    }

    pub fn decode(spec: FieldSpec, rows: &[Vec<Vec<String>>]) -> Result<Self, LinalgError> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| FieldElement::decode(spec, x))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }

    fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn same_shape(&self, rhs: &Self) -> Result<(), LinalgError> {
        self.check_field(rhs.spec)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn check_field(&self, other: FieldSpec) -> Result<(), LinalgError> {
        if self.spec != other {
            return Err(valued_field::FieldError::SpecMismatch {
                left: self.spec,
                right: other,
            }
            .into());
        }
        Ok(())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Self {
        Self {
            spec: self.spec,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_matrix_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Matrix> for &Matrix {
            type Output = Matrix;
            /// Panics on a shape or field mismatch.
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).expect("incompatible matrices")
            }
        }
    };
}

forward_matrix_op!(Add, add, checked_add);
forward_matrix_op!(Sub, sub, checked_sub);
forward_matrix_op!(Mul, mul, checked_mul);
