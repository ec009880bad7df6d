// Exact arithmetic in `E = Q(2^(1/6))` and the normalized valuation
// `v(2) = 1`, so that `v(u) = 1/6`.

use std::error::Error;

use valued_field::{FieldElement, FieldSpec, Valuation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::new(2, 6)?;
    let u = FieldElement::uniformizer(spec);
    println!("E = {spec}, u = {u}, u^6 = {}", u.pow(6));
    assert_eq!(u.pow(6), FieldElement::from_int(spec, 2));

    // Valuations add under multiplication and 2 + u^3 has the valuation of u^3.
    let x = FieldElement::from_frac(spec, 3, 4);
    let y = &FieldElement::from_int(spec, 2) + &FieldElement::u_pow(spec, 3);
    println!("v({x}) = {}, v({y}) = {}", x.valuation(), y.valuation());
    assert_eq!(x.valuation(), Valuation::from_int(-2));
    assert_eq!(y.valuation(), Valuation::from_frac(1, 2));
    assert_eq!((&x * &y).valuation(), Valuation::from_frac(-3, 2));

    // Division is exact; the inverse of 1 + u is a polynomial in u.
    let z = &FieldElement::one(spec) + &u;
    let w = z.inv()?;
    println!("1/({z}) = {w}");
    assert!((&z * &w).is_one());
    assert_eq!(y.checked_div(&z)?.checked_mul(&z)?, y);

    // The text form is one "num/den" string per power of u.
    let text = y.encode();
    println!("{y} encodes as {text:?}");
    assert_eq!(FieldElement::decode(spec, &text)?, y);
    assert_eq!(FieldElement::zero(spec).valuation(), Valuation::Infinite);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
