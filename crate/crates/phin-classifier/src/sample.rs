//! Random valid instances and basis changes, for property tests and the
//! certification campaign.

use exact_linalg::Matrix;
use phin_core::{FieldElement, FieldSpec, HodgeType, Q64};
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::catalog::{self, ParamDomain, Vals};
use crate::enumerate::{element_with_valuation, valuation_grid};
use crate::{FamilyId, FamilyInstance};

/// Valuation tuples on the `(1/e)Z` grid satisfying every condition of `id`.
pub fn admissible_valuations(id: FamilyId, h: HodgeType, e: u32) -> Vec<Vec<Q64>> {
    let conds = catalog::conditions(id);
    valuation_grid(id.shape(), h, e)
        .into_iter()
        .filter(|v| conds.iter().all(|c| c.holds(&Vals::new(h, v))))
        .collect()
}

/// A small nonzero rational, occasionally with a `u` term.
pub fn random_element<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> FieldElement {
    let num = rng.random_range(-4..=4);
    let den = rng.random_range(1..=3);
    let x = FieldElement::from_frac(spec, num, den);
    if rng.random_bool(0.2) {
        &x + &FieldElement::uniformizer(spec).scale_int(rng.random_range(1..=2))
    } else {
        x
    }
}

fn random_unit<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> FieldElement {
    const UNITS: [(i64, i64); 8] = [
        (1, 1),
        (-1, 1),
        (3, 1),
        (1, 3),
        (5, 1),
        (-3, 1),
        (7, 5),
        (5, 3),
    ];
    let &(n, d) = UNITS.choose(rng).expect("non-empty");
    let unit = FieldElement::from_frac(spec, n, d);
    if rng.random_bool(0.25) {
        &unit + &FieldElement::uniformizer(spec)
    } else {
        unit
    }
}

fn random_param<R: Rng + ?Sized>(spec: FieldSpec, d: ParamDomain, rng: &mut R) -> FieldElement {
    loop {
        let x = if rng.random_bool(0.15) {
            FieldElement::from_int(spec, rng.random_range(0..=1))
        } else {
            random_element(spec, rng)
        };
        let ok = match d {
            ParamDomain::Any | ParamDomain::Projective => true,
            ParamDomain::NonZero => !x.is_zero(),
            ParamDomain::NotZeroOne => !x.is_zero() && !x.is_one(),
        };
        if ok {
            return x;
        }
    }
}

/// A uniformly chosen valid instance of `id` at Hodge type `h`, or `None`
/// when the family's conditions have no solution on the grid.
pub fn random_instance<R: Rng + ?Sized>(
    spec: FieldSpec,
    id: FamilyId,
    h: HodgeType,
    rng: &mut R,
) -> Option<FamilyInstance> {
    let grid = admissible_valuations(id, h, spec.ramification());
    let vals = grid.choose(rng)?;
    Some(random_instance_with(spec, id, h, vals, rng))
}

/// A valid instance of `id` with the given eigenvalue valuations, which
/// must satisfy the family's conditions.
pub fn random_instance_with<R: Rng + ?Sized>(
    spec: FieldSpec,
    id: FamilyId,
    h: HodgeType,
    vals: &[Q64],
    rng: &mut R,
) -> FamilyInstance {
    loop {
        let fi = random_parameters(spec, id, h, vals, rng);
        if fi.violations().is_empty() {
            return fi;
        }
    }
}

/// Parameters for the family's pattern at arbitrary valuations: only the
/// domain constraints hold, so [`instantiate_unchecked`](crate::instantiate_unchecked)
/// accepts the result even when the valuation conditions fail.
pub fn random_pattern_instance<R: Rng + ?Sized>(
    spec: FieldSpec,
    id: FamilyId,
    h: HodgeType,
    vals: &[Q64],
    rng: &mut R,
) -> FamilyInstance {
    loop {
        let fi = random_parameters(spec, id, h, vals, rng);
        if crate::instantiate_unchecked(&fi).is_ok() {
            return fi;
        }
    }
}

fn random_parameters<R: Rng + ?Sized>(
    spec: FieldSpec,
    id: FamilyId,
    h: HodgeType,
    vals: &[Q64],
    rng: &mut R,
) -> FamilyInstance {
    let eigen = vals
        .iter()
        .map(|&v| &element_with_valuation(spec, v, 1) * &random_unit(spec, rng))
        .collect();
    let fil = catalog::entry(id)
        .domains
        .iter()
        .map(|&d| random_param(spec, d, rng))
        .collect();
    FamilyInstance::new(id, eigen, fil, h).normalized()
}

/// A random invertible matrix with small integer entries.
pub fn random_invertible<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> Matrix {
    loop {
        let m = Matrix::from_fn(spec, 3, 3, |_, _| {
            FieldElement::from_int(spec, rng.random_range(-2..=2))
        });
        if !m.determinant().expect("3x3").is_zero() {
            return m;
        }
    }
}
