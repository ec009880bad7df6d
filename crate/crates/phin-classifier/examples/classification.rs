// Classifying an admissible module given in an arbitrary basis: the
// answer is a family with parameters, plus the basis change carrying the
// module onto that family's representative.

use std::error::Error;

use phin_classifier::sample::random_invertible;
use phin_classifier::{classify, equivalence_class, instantiate, is_admissible, param_equivalent, FamilyId, FamilyInstance};
use phin_core::{FieldElement, FieldSpec, HodgeType, JordanHint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let h = HodgeType::new(3, 7);

    // Three distinct eigenvalues of valuation 10/3 and a flag in general
    // position, parametrized by L = 3.
    let eigen: Vec<FieldElement> = [1, 3, 5].iter().map(|&c| FieldElement::u_pow(spec, 20).scale_int(c)).collect();
    let fi = FamilyInstance::new(FamilyId::Cris(26), eigen.clone(), vec![FieldElement::from_int(spec, 3)], h);
    let mut m = instantiate(&fi)?;

    // Off a triangular basis, crystalline phi needs its eigenvalues stated.
    m.jordan = Some(JordanHint { eigenvalues: eigen, change_of_basis: None });
    let moved = m.transport(&random_invertible(spec, &mut ChaCha8Rng::seed_from_u64(5)))?;
    assert!(is_admissible(&moved)?.admissible);

    let c = classify(&moved)?;
    println!("classified as {} with eigenvalues {:?} and L = {}", c.instance.id, c.instance.eigen_params.iter().map(ToString::to_string).collect::<Vec<_>>(), c.instance.fil_params[0]);

    // The eigenvalues may come back permuted, with L moved by the matching
    // symmetry of the family; the catalog's relations identify the two.
    assert!(param_equivalent(&fi, &c.instance));
    println!("{} parameter sets describe this module", equivalence_class(&fi).len());

    // The transition carries the module onto the representative.
    let back = moved.transport(&c.transition)?;
    let rep = instantiate(&c.instance)?;
    assert_eq!((back.phi, back.n, back.fil), (rep.phi, rep.n, rep.fil));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
