// Weak admissibility checked by hand on a module whose `phi` is already in
// standard form: list the `(phi, N)`-stable subspaces, then compare the
// Hodge and Newton invariants on each.

use std::error::Error;

use phin_core::{
    check_admissibility, hodge_invariant, invariant_families, newton_invariant, standard_n, standard_phi,
    FieldElement, FieldSpec, Filtration, HodgeType, PhiNModule, Shape, Subspace, Q64,
};

fn flag(spec: FieldSpec, line: &[i64], other: &[i64]) -> Result<Filtration, Box<dyn Error>> {
    let v = |xs: &[i64]| xs.iter().map(|&x| FieldElement::from_int(spec, x)).collect::<Vec<_>>();
    let l1 = Subspace::span(spec, 3, &[v(line)])?;
    let l2 = Subspace::span(spec, 3, &[v(line), v(other)])?;
    Ok(Filtration::new(l1, l2))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let h = HodgeType::new(1, 2);

    // Distinct eigenvalues 4, 2, 3 with valuations 2, 1, 0: t_N(D) = 3 = r + s.
    let shape = Shape::Crystalline(6);
    let eigen: Vec<FieldElement> = [4, 2, 3].iter().map(|&x| FieldElement::from_int(spec, x)).collect();
    let phi = standard_phi(shape, &eigen)?;
    let n = standard_n(spec, 0)?;

    // The stable subspaces are the six coordinate lines and planes.
    let families = invariant_families(&phi, &n, shape)?;
    for f in &families {
        println!("stable: {f}  (t_N = {})", f.newton());
    }
    assert_eq!(families.len(), 6);

    // A flag in general position is admissible.
    let generic = PhiNModule::new(spec, h, phi.clone(), n.clone(), flag(spec, &[1, 1, 1], &[0, 1, 2])?, None)?;
    let report = check_admissibility(&generic, &families)?;
    println!("generic flag: admissible = {}", report.admissible);
    assert!(report.admissible);

    // Putting L1 on the slope-0 eigenline breaks it: t_H(E e3) = s = 2 > 0.
    let bad = PhiNModule::new(spec, h, phi.clone(), n, flag(spec, &[0, 0, 1], &[1, 1, 0])?, None)?;
    let report = check_admissibility(&bad, &families)?;
    let w = report.witness.as_ref().ok_or("an inadmissible verdict names a subspace")?;
    println!("L1 = E e3: admissible = {}, witness {} with t_H = {} > t_N = {}", report.admissible, w.member, w.hodge, w.newton);
    assert!(!report.admissible);

    // The witness checks out directly.
    let e3 = Subspace::coordinate(spec, 3, &[2]);
    assert_eq!(w.member, e3);
    assert!(e3.is_invariant(&bad.phi)?);
    assert_eq!(hodge_invariant(&e3, &bad.fil, h)?, Q64::from_integer(2));
    assert_eq!(newton_invariant(&e3, &bad.phi)?, Q64::from_integer(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
