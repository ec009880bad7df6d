//! Exact linear algebra over [`valued_field::FieldElement`].
//!
//! Three value types:
//!
//! * [`Matrix`], dense and row-major;
//! * [`Subspace`], stored by its reduced row-echelon basis so that equal
//!   subspaces have identical representations;
//! * [`MatrixSpace`], a linear space of matrices given by a basis, used to
//!   solve simultaneous linear conditions such as `P A = B P`.
//!
//! All vectors are column vectors represented as `Vec<FieldElement>`.

mod error;
mod matrix;
mod reduce;
mod search;
mod space;
mod subspace;

pub use error::LinalgError;
pub use matrix::Matrix;
pub use search::SmallSupportPoints;
pub use space::{intertwiner_space, MatrixSpace};
pub use subspace::Subspace;

pub use valued_field::{FieldElement, FieldSpec};

/// A column vector.
pub type Vector = Vec<FieldElement>;

/// The standard basis vector `e_{i+1}` of `E^n` (zero-based index `i`).
pub fn unit_vector(spec: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = vec![FieldElement::zero(spec); n];
    v[i] = FieldElement::one(spec);
    v
}

/// A vector with small integer entries.
pub fn int_vector(spec: FieldSpec, entries: &[i64]) -> Vector {
    entries.iter().map(|&x| FieldElement::from_int(spec, x)).collect()
}

/// The dot product `sum a_i b_i`.
pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len(), "dot product of vectors of different length");
    let mut acc = FieldElement::zero(a[0].spec());
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x * y;
        }
    }
    acc
}
