// The commutant of each standard `(phi, N)` pair, computed by brute force
// and compared with the entry pattern it is expected to have.

use std::error::Error;

use phin_core::Shape;
use phin_iso::{commutant_shape_check, template};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for shape in Shape::ALL {
        let (constraints, dim) = template(shape);
        let report = commutant_shape_check(shape)?;
        let pattern: Vec<String> = constraints.iter().map(ToString::to_string).collect();
        println!("{:>8}: dim {dim}  {}", shape.to_string(), pattern.join(", "));
        assert_eq!(report.dim, dim);
    }
    // With three distinct eigenvalues every permutation matrix intertwines
    // the standard phi with its permuted version.
    assert_eq!(commutant_shape_check(Shape::Crystalline(6))?.permutations_checked, 6);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
