//! Classification of admissible three-dimensional filtered `(phi, N)`-modules
//! of Hodge type `(0, r, s)` into 49 families.
//!
//! A module is first brought to a standard `(phi, N)` ([`normalize`]): the
//! monodromy to zero, `e1 -> e3` or the chain `e1 -> e2 -> e3`, and `phi` to
//! one of twelve [`Shape`](phin_core::Shape)s. What remains is the flag
//! `L1 ⊂ L2`, which can still be moved by the commutant of the standard
//! pair. [`classify`] looks, family by family, for a commutant element
//! carrying the flag onto the family's pattern, and reads off the
//! parameters.
//!
//! ```
//! use phin_classifier::{classify, instantiate, FamilyId, FamilyInstance};
//! use phin_core::{FieldElement, FieldSpec, HodgeType};
//!
//! let spec = FieldSpec::default();
//! let fi = FamilyInstance::new(
//!     FamilyId::Cris(1),
//!     vec![FieldElement::from_int(spec, 2)],
//!     vec![],
//!     HodgeType::new(1, 2),
//! );
//! let m = instantiate(&fi).unwrap();
//! assert_eq!(classify(&m).unwrap().instance, fi);
//! ```

pub mod catalog;
mod classify;
mod enumerate;
mod equivalence;
mod error;
mod family_id;
mod instance;
mod normalize;
mod reducibility;
pub mod sample;

pub use classify::{classify, classify_candidates, Classification};
pub use enumerate::{
    element_with_valuation, enumerate_families, enumerate_families_in, valuation_grid,
    witness_instance, FamilyReport,
};
pub use equivalence::{
    cris26_relations, equivalence_class, param_equivalent, relations, Mobius, Relation,
};
pub use error::ClassifyError;
pub use family_id::FamilyId;
pub use instance::{
    instantiate, instantiate_unchecked, pattern_filtration, FamilyInstance, InstanceDoc,
};
pub use normalize::{
    align_monodromy, is_admissible, normalize, normalize_phi, sort_eigenvalues, Normalized,
};
pub use reducibility::{reducibility, ReducibilityKind, ReducibilityReport};
