//! Random valid instances: admissibility, classification after a basis
//! change, and the reducibility lists checked against the stable families.

use phin_classifier::sample::{random_instance, random_invertible};
use phin_classifier::{
    classify, cris26_relations, instantiate, is_admissible, param_equivalent, reducibility,
    FamilyId, FamilyInstance, InstanceDoc, Mobius, ReducibilityKind, Relation,
};
use phin_core::{
    hodge_invariant, invariant_families, newton_invariant, FieldSpec, HodgeType, JordanHint,
    Subspace,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const HODGE: [(i64, i64); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 7)];

fn instance(id: FamilyId, hodge: (i64, i64), seed: u64) -> Option<FamilyInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = HodgeType::new(hodge.0, hodge.1);
    random_instance(FieldSpec::default(), id, h, &mut rng)
}

fn any_family() -> impl Strategy<Value = FamilyId> {
    proptest::sample::select(FamilyId::all().collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn representatives_are_admissible_and_classify_back(
        id in any_family(),
        hodge in proptest::sample::select(HODGE.to_vec()),
        seed in any::<u64>(),
    ) {
        let fi = instance(id, hodge, seed);
        prop_assume!(fi.is_some());
        let fi = fi.unwrap();
        let mut m = instantiate(&fi).unwrap();
        prop_assert!(is_admissible(&m).unwrap().admissible);
        if id.n_rank() == 0 {
            // Off the triangular basis the eigenvalues must be supplied.
            let eigenvalues = (0..3).map(|i| m.phi.get(i, i).clone()).collect();
            m.jordan = Some(JordanHint { eigenvalues, change_of_basis: None });
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let moved = m.transport(&random_invertible(fi.spec(), &mut rng)).unwrap();
        let c = classify(&moved).unwrap();
        prop_assert!(param_equivalent(&fi, &c.instance), "{:?} came back as {:?}", fi, c.instance);
        // The reported transition really carries the input onto the
        // representative of the reported instance.
        let (back, rep) = (moved.transport(&c.transition).unwrap(), instantiate(&c.instance).unwrap());
        prop_assert_eq!((back.phi, back.n, back.fil), (rep.phi, rep.n, rep.fil));
    }

    #[test]
    fn reducibility_lists_are_submodules(
        id in any_family(),
        hodge in proptest::sample::select(HODGE.to_vec()),
        seed in any::<u64>(),
    ) {
        let fi = instance(id, hodge, seed);
        prop_assume!(fi.is_some());
        let fi = fi.unwrap();
        let m = instantiate(&fi).unwrap();
        let report = reducibility(&fi).unwrap();
        for u in &report.submodules {
            prop_assert!(u.dim() > 0 && u.dim() < 3);
            prop_assert!(u.is_invariant(&m.phi).unwrap() && u.is_invariant(&m.n).unwrap());
            prop_assert_eq!(hodge_invariant(u, &m.fil, m.hodge).unwrap(), newton_invariant(u, &m.phi).unwrap());
        }

        // A proper subobject exists exactly when some stable family reaches
        // its Newton number.
        let families = invariant_families(&m.phi, &m.n, id.shape()).unwrap();
        let reducible = families
            .iter()
            .any(|f| f.max_hodge(&m.fil, m.hodge).unwrap() == f.newton());
        prop_assert_eq!(report.kind != ReducibilityKind::Irreducible, reducible);

        if report.kind == ReducibilityKind::Decomposable {
            let full = Subspace::full(fi.spec(), 3);
            let split = report.submodules.iter().enumerate().any(|(i, a)| {
                report.submodules[i + 1..].iter().any(|b| {
                    a.sum(b).unwrap() == full && a.intersect(b).unwrap().dim() == 0
                })
            });
            prop_assert!(split);
        }
    }

    #[test]
    fn instance_documents_round_trip(
        id in any_family(),
        hodge in proptest::sample::select(HODGE.to_vec()),
        seed in any::<u64>(),
    ) {
        let fi = instance(id, hodge, seed);
        prop_assume!(fi.is_some());
        let fi = fi.unwrap();
        let json = serde_json::to_string(&fi.to_doc()).unwrap();
        let doc: InstanceDoc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(FamilyInstance::from_doc(&doc).unwrap(), fi);
    }
}

fn cris26_relation(tau: [usize; 3], mobius: Mobius) -> Relation {
    Relation {
        from: FamilyId::Cris(26),
        to: FamilyId::Cris(26),
        tau,
        mobius,
    }
}

#[test]
fn cris26_symmetries_compose_within_the_group() {
    let mut group: Vec<Relation> = cris26_relations()
        .into_iter()
        .map(|(t, m)| cris26_relation(t, m))
        .collect();
    group.push(cris26_relation([0, 1, 2], Mobius::Identity));
    let h = HodgeType::new(3, 7);
    let mut checked = 0;
    for seed in 0..20 {
        let Some(fi) = instance(FamilyId::Cris(26), (h.r, h.s), seed) else {
            continue;
        };
        let images: Vec<FamilyInstance> = group.iter().filter_map(|g| g.apply(&fi)).collect();
        for a in &group {
            for b in &group {
                let Some(ab) = a.apply(&fi).and_then(|x| b.apply(&x)) else {
                    continue;
                };
                assert!(images.contains(&ab), "{a:?} then {b:?} leaves the group");
                checked += 1;
            }
        }
        for g in &group {
            // Permuting eigenvalues can break the valuation ordering; the
            // images that stay valid must denote the same module.
            if let Some(image) = g.apply(&fi).filter(|x| x.violations().is_empty()) {
                assert_eq!(
                    classify(&instantiate(&image).unwrap())
                        .map(|c| param_equivalent(&fi, &c.instance))
                        .ok(),
                    Some(true)
                );
            }
        }
    }
    assert!(checked > 0);
}
