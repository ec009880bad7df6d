// Deciding isomorphism directly from the matrices, and comparing with the
// catalog's own list of coincidences between parameter values.

use std::error::Error;

use phin_classifier::{instantiate, param_equivalent, FamilyId, FamilyInstance};
use phin_core::{FieldElement, FieldSpec, HodgeType};
use phin_iso::{are_isomorphic, isomorphism_space};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let h = HodgeType::new(3, 7);
    let lambda = |c: i64| FieldElement::u_pow(spec, 20).scale_int(c);
    let cris26 = |order: [i64; 3], l: i64| {
        FamilyInstance::new(FamilyId::Cris(26), order.map(lambda).to_vec(), vec![FieldElement::from_int(spec, l)], h)
    };

    // Swapping the first two eigenvalues turns L into 1 - L.
    let a = cris26([1, 3, 5], 3);
    let b = cris26([3, 1, 5], -2);
    let c = cris26([1, 3, 5], 5);
    let (ma, mb, mc) = (instantiate(&a)?, instantiate(&b)?, instantiate(&c)?);

    let witness = are_isomorphic(&ma, &mb)?.ok_or("expected an isomorphism")?;
    assert!(witness.verify(&ma, &mb));
    println!("L = 3 and L = -2 (eigenvalues swapped) are isomorphic via\n{}", witness.p);
    assert!(param_equivalent(&a, &b));

    // Different L with the same eigenvalues: the only intertwiners are
    // singular, so the space of candidates has no invertible point.
    assert!(are_isomorphic(&ma, &mc)?.is_none());
    assert!(!param_equivalent(&a, &c));
    println!("L = 3 and L = 5: not isomorphic (candidate space has dimension {})", isomorphism_space(&ma, &mc)?.dim());

    // Modules of different Hodge types are never isomorphic.
    let other = FamilyInstance::new(FamilyId::Cris(26), [1, 3, 5].map(lambda).to_vec(), vec![FieldElement::from_int(spec, 3)], HodgeType::new(4, 6));
    assert!(are_isomorphic(&ma, &instantiate(&other)?)?.is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
