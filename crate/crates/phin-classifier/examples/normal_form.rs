// Bringing `(phi, N)` to one of the twelve standard shapes. The module is
// written in a scrambled basis; `normalize` recovers the shape, the
// eigenvalue parameters and a transition matrix proving the conjugacy.

use std::error::Error;

use phin_classifier::normalize;
use phin_core::{
    standard_n, standard_phi, FieldElement, FieldSpec, Filtration, HodgeType, Matrix, PhiNModule, Shape, Subspace,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let h = HodgeType::new(1, 3);

    // N of rank 1 (e1 -> e3); phi has a Jordan block for p x on e1, e2 and
    // the eigenvalue x on e3.
    let x = FieldElement::u_pow(spec, 2).scale_int(3);
    let shape = Shape::RankOne(4);
    let phi = standard_phi(shape, std::slice::from_ref(&x))?;
    let n = standard_n(spec, 1)?;
    println!("standard phi for {shape}:\n{phi}");

    let fil = Filtration::new(Subspace::coordinate(spec, 3, &[0]), Subspace::coordinate(spec, 3, &[0, 1]));
    let m = PhiNModule::new(spec, h, phi.clone(), n.clone(), fil, None)?;
    let q = Matrix::from_ints(spec, &[&[1, 0, 2], &[1, 1, 0], &[0, -1, 1]]);
    let scrambled = m.transport(&q)?;
    println!("scrambled phi:\n{}", scrambled.phi);

    let norm = normalize(&scrambled)?;
    println!("recovered shape {} with eigenvalue {}", norm.shape, norm.eigen[0]);
    assert_eq!(norm.shape, shape);
    assert_eq!(norm.eigen, vec![x]);

    // T phi T^-1 and T N T^-1 are the standard pair.
    let t = &norm.transition;
    assert_eq!(t.conjugate(&scrambled.phi)?, phi);
    assert_eq!(t.conjugate(&scrambled.n)?, n);
    println!("transition:\n{t}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
