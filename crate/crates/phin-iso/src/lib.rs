//! Isomorphism of filtered `(phi, N)`-modules, decided without the catalog.
//!
//! An isomorphism `a -> b` is an invertible `P` with `P phi_a = phi_b P`,
//! `P N_a = N_b P`, `P(L1_a) = L1_b` and `P(L2_a) = L2_b`. All such `P`,
//! singular ones included, form a linear space cut out by linear
//! conditions. [`are_isomorphic`] computes that space and searches it for
//! an invertible point on a deterministic grid that is exhaustive for the
//! determinant's degree.
//!
//! [`commutant_shape_check`] compares the brute-force commutant of each
//! standard `(phi, N)` pair with its expected entry pattern.
//!
//! ```
//! use phin_core::{Filtration, FieldElement, FieldSpec, HodgeType, Matrix, PhiNModule, Subspace};
//! use phin_iso::are_isomorphic;
//!
//! let spec = FieldSpec::default();
//! let phi = Matrix::diag(&[2, 3, 5].map(|x| FieldElement::from_int(spec, x)));
//! let fil = |v: &[i64]| {
//!     let line = Subspace::span(spec, 3, &[exact_linalg::int_vector(spec, v)]).unwrap();
//!     Filtration::new(line.clone(), line.sum(&Subspace::coordinate(spec, 3, &[2])).unwrap())
//! };
//! let module = |f| PhiNModule::new(spec, HodgeType::new(1, 2), phi.clone(), Matrix::zeros(spec, 3, 3), f, None);
//! let a = module(fil(&[1, 1, 0])).unwrap();
//! let b = module(fil(&[1, 4, 0])).unwrap();
//! let witness = are_isomorphic(&a, &b).unwrap().expect("rescale e2");
//! assert!(witness.verify(&a, &b));
//! ```

mod commutant;
mod iso;

pub use commutant::{
    commutant_shape_check, commutant_shape_check_with, template, CommutantMismatch,
    CommutantReport, Constraint,
};
pub use iso::{are_isomorphic, isomorphism_space, IsoError, IsoWitness};
