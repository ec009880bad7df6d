// Which families occur at a given Hodge type, and the valuation conditions
// that decide it. A family's pattern is admissible exactly when its
// conditions hold, which the last part checks against the admissibility
// test directly.

use std::error::Error;

use phin_classifier::{
    enumerate_families, instantiate_unchecked, is_admissible, valuation_grid, witness_instance, FamilyId,
};
use phin_core::{FieldSpec, HodgeType, Q64};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();

    // With N of rank 2 and weights (0, 1, 2) only one family is left.
    let rank2 = enumerate_families(HodgeType::new(1, 2), Some(2));
    for f in &rank2 {
        println!("(0,1,2), rank N = 2: {} when {}", f.id, f.conditions.join(", "));
    }
    assert_eq!(rank2.iter().map(|f| f.id).collect::<Vec<_>>(), vec![FamilyId::RankTwo(3)]);

    let all = enumerate_families(HodgeType::new(2, 5), None);
    println!("(0,2,5): {} families", all.len());

    // Cris2: admissible iff s >= 2r. Its eigenvalue has valuation (r+s)/3.
    let r = 2;
    for s in 3..=6 {
        let h = HodgeType::new(r, s);
        let id = FamilyId::Cris(2);
        let vals = valuation_grid(id.shape(), h, 6);
        assert_eq!(vals, vec![vec![Q64::new(r + s, 3)]]);
        let m = instantiate_unchecked(&witness_instance(spec, id, h, &vals[0]))?;
        let admissible = is_admissible(&m)?.admissible;
        println!("Cris2 pattern at (0,{r},{s}): admissible = {admissible}");
        assert_eq!(admissible, s >= 2 * r);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
