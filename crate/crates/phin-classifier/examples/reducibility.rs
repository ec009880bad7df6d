// Reducibility read off a classification: the kind and the submodules the
// family's statement lists, each checked to be a `(phi, N)`-stable
// subspace on which the Hodge and Newton invariants agree.

use std::error::Error;

use phin_classifier::sample::admissible_valuations;
use phin_classifier::{instantiate, reducibility, witness_instance, FamilyId, ReducibilityKind};
use phin_core::{hodge_invariant, newton_invariant, FieldSpec, HodgeType};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = FieldSpec::default();
    let cases = [
        (FamilyId::RankOne(19), HodgeType::new(1, 2)),
        (FamilyId::RankOne(19), HodgeType::new(1, 4)),
        (FamilyId::Cris(14), HodgeType::new(1, 3)),
        (FamilyId::RankTwo(3), HodgeType::new(1, 2)),
    ];
    for (id, h) in cases {
        let vals = admissible_valuations(id, h, spec.ramification());
        let fi = witness_instance(spec, id, h, vals.first().ok_or("no admissible valuations")?);
        let m = instantiate(&fi)?;
        let report = reducibility(&fi)?;
        let subs: Vec<String> = report.submodules.iter().map(ToString::to_string).collect();
        println!("{id} at {h}: {} [{}]", report.kind, subs.join(", "));
        for u in &report.submodules {
            assert!(u.is_invariant(&m.phi)? && u.is_invariant(&m.n)?);
            assert_eq!(hodge_invariant(u, &m.fil, h)?, newton_invariant(u, &m.phi)?);
        }
        if report.kind == ReducibilityKind::Irreducible {
            assert!(report.submodules.is_empty());
        }
    }

    // With s = r + 1 the rank-1 family R1_19 has three submodules.
    let h = HodgeType::new(1, 2);
    let vals = admissible_valuations(FamilyId::RankOne(19), h, spec.ramification());
    let report = reducibility(&witness_instance(spec, FamilyId::RankOne(19), h, &vals[0]))?;
    assert_eq!(report.kind, ReducibilityKind::NonSplitReducible);
    assert_eq!(report.submodules.len(), 3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
