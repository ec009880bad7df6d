//! Each family's valuation conditions are exactly the admissibility of its
//! filtration pattern: off the conditions the pattern module must fail.

use phin_classifier::catalog::{failed_conditions, Vals};
use phin_classifier::{instantiate_unchecked, is_admissible, valuation_grid, witness_instance, FamilyId};
use phin_core::{FieldSpec, HodgeType, Shape};

fn check(h: HodgeType, grid_e: u32) -> usize {
    let spec = FieldSpec::default();
    let mut checked = 0;
    for id in FamilyId::all() {
        for v in valuation_grid(id.shape(), h, grid_e) {
            // The three-eigenvalue patterns are written for eigenvalues in
            // decreasing valuation.
            if id.shape() == Shape::Crystalline(6) && !(v[0] >= v[1] && v[1] >= v[2]) {
                continue;
            }
            let fi = witness_instance(spec, id, h, &v);
            let Ok(m) = instantiate_unchecked(&fi) else { continue };
            let expected = failed_conditions(id, &Vals::new(h, &v)).is_empty();
            let admissible = is_admissible(&m).unwrap().admissible;
            assert_eq!(admissible, expected, "{id} at {h} with valuations {v:?}");
            checked += 1;
        }
    }
    checked
}

#[test]
fn conditions_match_admissibility_at_small_weights() {
    assert!(check(HodgeType::new(1, 3), 6) > 1000);
}

#[test]
fn conditions_match_admissibility_at_larger_weights() {
    assert!(check(HodgeType::new(2, 5), 2) > 300);
}
