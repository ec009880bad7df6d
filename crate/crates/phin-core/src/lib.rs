//! The data model for three-dimensional filtered `(phi, N)`-modules over
//! `E = Q(p^(1/e))` with Hodge type `(0, r, s)`, and the admissibility
//! test.
//!
//! A module is `D = E^3` with a Frobenius matrix `phi`, a nilpotent
//! monodromy matrix `N` satisfying `N phi = p phi N`, and a flag
//! `L1 ⊂ L2` encoding `Fil^i D = D` for `i <= 0`, `L2` for `0 < i <= r`,
//! `L1` for `r < i <= s` and `0` above `s`.
//!
//! Admissibility compares, on every `(phi, N)`-stable subspace `U`, the
//! Hodge invariant `t_H(U) = s dim(U ∩ L1) + r (dim(U ∩ L2) - dim(U ∩ L1))`
//! with the Newton invariant `t_N(U) = v(det phi|_U)`. The stable subspaces
//! of a module in one of the twelve [`Shape`]s come in finitely many
//! [`SubobjectFamily`]s, and the largest Hodge invariant within a family has
//! a closed form, so the test is a finite computation.

mod admissibility;
mod doc;
mod error;
mod family;
mod invariants;
mod module;
mod shape;

pub use admissibility::{check_admissibility, AdmissibilityReport, AdmissibilityWitness};
pub use doc::{
    matrix_doc, parse_matrix, DocError, ElementDoc, FieldDoc, HodgeDoc, JordanDoc, MatrixDoc, ModuleDoc, VectorDoc,
};
pub use error::CoreError;
pub use family::{invariant_families, MemberSampler, SubobjectFamily};
pub use invariants::{hodge_invariant, newton_invariant};
pub use module::{Filtration, HodgeType, JordanHint, PhiNModule, Violation};
pub use shape::{standard_n, standard_phi, Shape};

pub use exact_linalg::{Matrix, Subspace, Vector};
pub use valued_field::{FieldElement, FieldSpec, Valuation, Q64};
