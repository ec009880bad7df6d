// Linear algebra over `E`: subspaces, invariance, and the space of
// matrices intertwining two operators, with an invertible element found
// by exact search.

use std::error::Error;

use exact_linalg::{int_vector, intertwiner_space, Matrix, MatrixSpace, Subspace};
use valued_field::{FieldElement, FieldSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let u = FieldElement::uniformizer(spec);

    // A Jordan block with eigenvalue u: e1 -> u e1 + e2, e2 -> u e2, e3 -> u e3.
    let mut a = Matrix::diag(&[u.clone(), u.clone(), u.clone()]);
    a.set(1, 0, FieldElement::one(spec));
    let line = Subspace::span(spec, 3, &[int_vector(spec, &[0, 1, 0])])?;
    let plane = Subspace::span(spec, 3, &[int_vector(spec, &[1, 0, 0]), int_vector(spec, &[0, 1, 0])])?;
    println!("E e2 = {line} is invariant: {}", line.is_invariant(&a)?);
    assert!(line.is_invariant(&a)?);
    assert!(plane.is_invariant(&a)?);
    assert!(!Subspace::coordinate(spec, 3, &[0]).is_invariant(&a)?);

    // The same operator written in another basis.
    let q = Matrix::from_ints(spec, &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
    let b = q.conjugate(&a)?;
    println!("in the new basis:\n{b}");

    // Matrices P with P a = b P form a 5-dimensional space, and q lies in it.
    let basis = intertwiner_space(&[(a.clone(), b.clone())])?;
    println!("intertwiner space has dimension {}", basis.len());
    assert_eq!(basis.len(), 5);
    let space = MatrixSpace::from_basis(spec, 3, 3, basis);
    let p = space.find_invertible().ok_or("no invertible intertwiner")?;
    assert_eq!(p.checked_mul(&a)?, b.checked_mul(&p)?);
    println!("an invertible intertwiner:\n{p}");

    // An intertwiner sends the eigenline E e2 to an eigenline of b or to
    // zero. E e1 is not b-invariant, so asking P(E e2) ⊆ E e1 forces P e2 = 0.
    let e1 = Subspace::coordinate(spec, 3, &[0]);
    assert!(!e1.is_invariant(&b)?);
    let squeezed = space.mapping_into(&line, &e1)?;
    println!("intertwiners with P(E e2) ⊆ E e1: dimension {}", squeezed.dim());
    assert!(squeezed.find_invertible().is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
