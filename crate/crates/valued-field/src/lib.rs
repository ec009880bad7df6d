//! Exact arithmetic in the field `E = Q(p^(1/e))`.
//!
//! Elements are stored as `e` rational coefficients of the powers of the
//! uniformizer `u = p^(1/e)`, reduced modulo `u^e - p`. The valuation is
//! normalized by `v(p) = 1`, so its value group is `(1/e)Z`.
//!
//! ```
//! use valued_field::{FieldSpec, FieldElement, Valuation};
//!
//! let spec = FieldSpec::new(2, 6).unwrap();
//! let u = FieldElement::uniformizer(spec);
//! assert_eq!(&u * &u.pow(5), FieldElement::from_int(spec, 2));
//! assert_eq!(u.pow(3).valuation(), Valuation::from_frac(1, 2));
//! ```

mod element;
mod error;
mod poly;
mod spec;
mod valuation;

pub use element::FieldElement;
pub use error::FieldError;
pub use spec::FieldSpec;
pub use valuation::{p_adic_order, Valuation};

/// Rational numbers with machine-sized numerator and denominator.
///
/// Valuations and Hodge/Newton invariants live in `(1/e)Z` for small `e`,
/// so they never need arbitrary precision.
pub type Q64 = num_rational::Ratio<i64>;
