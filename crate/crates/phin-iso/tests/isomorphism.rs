use phin_classifier::sample::admissible_valuations;
use phin_classifier::sample::{random_instance, random_invertible};
use phin_classifier::{
    cris26_relations, equivalence_class, instantiate, param_equivalent, relations,
    witness_instance, FamilyId, FamilyInstance,
};
use phin_core::{FieldElement, FieldSpec, HodgeType, Matrix, PhiNModule};
use phin_iso::{are_isomorphic, IsoWitness};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const HODGE: [(i64, i64); 8] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 5),
    (3, 7),
    (4, 5),
];

fn spec() -> FieldSpec {
    FieldSpec::default()
}

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(spec(), n)
}

fn u_pow(k: i64) -> FieldElement {
    FieldElement::u_pow(spec(), k)
}

fn module(fi: &FamilyInstance) -> PhiNModule {
    instantiate(fi).unwrap()
}

/// The direct verdict, with the witness checked when there is one.
fn iso(a: &PhiNModule, b: &PhiNModule) -> bool {
    match are_isomorphic(a, b).unwrap() {
        Some(w) => {
            assert!(w.verify(a, b));
            true
        }
        None => false,
    }
}

#[test]
fn a_module_is_isomorphic_to_itself_by_the_identity() {
    let h = HodgeType::new(1, 3);
    let fi = FamilyInstance::new(
        FamilyId::Cris(14),
        vec![u_pow(18), u_pow(6), int(3)],
        vec![],
        h,
    );
    let m = module(&fi);
    let w = are_isomorphic(&m, &m).unwrap().unwrap();
    assert_eq!(
        w,
        IsoWitness {
            p: Matrix::identity(spec(), 3)
        }
    );
}

#[test]
fn cris17_and_cris19_with_reversed_eigenvalues() {
    // The two families overlap only at s = 2r with every valuation r.
    let h = HodgeType::new(1, 2);
    let eigen: Vec<FieldElement> = [1, 3, 5].iter().map(|&c| u_pow(6).scale_int(c)).collect();
    let a = FamilyInstance::new(FamilyId::Cris(17), eigen.clone(), vec![], h);
    let b = FamilyInstance::new(
        FamilyId::Cris(19),
        eigen.into_iter().rev().collect(),
        vec![],
        h,
    );
    assert!(iso(&module(&a), &module(&b)));
}

#[test]
fn r2_1_distinguishes_its_second_parameter() {
    let h = HodgeType::new(4, 5);
    let lambda = u_pow(12);
    let inst = |l2: i64| {
        FamilyInstance::new(
            FamilyId::RankTwo(1),
            vec![lambda.clone()],
            vec![int(2), int(l2)],
            h,
        )
    };
    let (a, b) = (inst(3), inst(-1));
    assert!(
        a.violations().is_empty() && b.violations().is_empty(),
        "{:?}",
        a.violations()
    );
    assert!(!iso(&module(&a), &module(&b)));
    assert!(!param_equivalent(&a, &b));
    assert!(iso(&module(&a), &module(&inst(3))));
}

/// A valid instance of `rel.from` whose image under `rel` is valid too.
fn related_pair(rel: &phin_classifier::Relation) -> (FamilyInstance, FamilyInstance) {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..400 {
        let &(r, s) = HODGE.choose(&mut rng).unwrap();
        let Some(a) = random_instance(spec(), rel.from, HodgeType::new(r, s), &mut rng) else {
            continue;
        };
        if let Some(b) = rel.apply(&a).filter(|b| b.violations().is_empty()) {
            return (a, b);
        }
    }
    panic!("no valid pair for {rel:?}");
}

#[test]
fn every_catalog_relation_is_an_isomorphism() {
    let cross: Vec<_> = relations().into_iter().filter(|r| r.from != r.to).collect();
    assert_eq!(cross.len(), 15);
    let cris26: Vec<_> = relations()
        .into_iter()
        .filter(|r| r.from == FamilyId::Cris(26))
        .collect();
    assert_eq!(cris26.len(), cris26_relations().len());
    for rel in cross.iter().chain(&cris26) {
        let (a, b) = related_pair(rel);
        assert!(iso(&module(&a), &module(&b)), "{rel:?} on {a:?}");
        assert!(iso(&module(&b), &module(&a)), "{rel:?} reversed on {a:?}");
        assert!(param_equivalent(&a, &b));
    }
}

#[test]
fn cris26_parameter_pairings() {
    // 𝔏 + 𝔏' = 1 pairs λ1 <-> λ2, 𝔏 𝔏' = 1 pairs λ2 <-> λ3. Equal
    // valuations keep the swapped orderings valid.
    let h = HodgeType::new(3, 7);
    let eigen: Vec<FieldElement> = [1, 3, 5].iter().map(|&c| u_pow(20).scale_int(c)).collect();
    let l = FieldElement::from_frac(spec(), 3, 2);
    let inst = |e: &[usize], x: FieldElement| {
        let fi = FamilyInstance::new(
            FamilyId::Cris(26),
            e.iter().map(|&i| eigen[i].clone()).collect(),
            vec![x],
            h,
        );
        assert!(fi.violations().is_empty(), "{:?}", fi.violations());
        fi
    };
    let a = inst(&[0, 1, 2], l.clone());
    let swap12 = inst(&[1, 0, 2], &int(1) - &l);
    let swap23 = inst(&[0, 2, 1], l.inv().unwrap());
    let neither = inst(&[0, 1, 2], int(5));
    for (b, expect) in [(&swap12, true), (&swap23, true), (&neither, false)] {
        assert_eq!(iso(&module(&a), &module(b)), expect, "{b:?}");
        assert_eq!(param_equivalent(&a, b), expect, "{b:?}");
    }
}

/// A deterministic instance of `id` at `h`, if the family exists there.
fn desk_instance(id: FamilyId, h: HodgeType) -> Option<FamilyInstance> {
    let v = admissible_valuations(id, h, 6).into_iter().next()?;
    Some(witness_instance(spec(), id, h, &v))
}

fn pairwise_distinct(ids: &[FamilyId]) {
    let hodge: Vec<HodgeType> = HODGE.iter().map(|&(r, s)| HodgeType::new(r, s)).collect();
    let mut compared = 0;
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            // Prefer a Hodge type where both families exist; otherwise
            // compare each at its own.
            let pair = hodge
                .iter()
                .find_map(|&h| Some((desk_instance(x, h)?, desk_instance(y, h)?)))
                .or_else(|| {
                    let a = hodge.iter().find_map(|&h| desk_instance(x, h))?;
                    let b = hodge.iter().find_map(|&h| desk_instance(y, h))?;
                    Some((a, b))
                })
                .unwrap_or_else(|| panic!("no instances of {x} and {y}"));
            assert!(!iso(&module(&pair.0), &module(&pair.1)), "{x} vs {y}");
            compared += 1;
        }
    }
    assert_eq!(compared, ids.len() * (ids.len() - 1) / 2);
}

#[test]
fn rank_one_families_are_pairwise_non_isomorphic() {
    pairwise_distinct(&(1..=20).map(FamilyId::RankOne).collect::<Vec<_>>());
}

#[test]
fn rank_two_families_are_pairwise_non_isomorphic() {
    pairwise_distinct(&(1..=3).map(FamilyId::RankTwo).collect::<Vec<_>>());
}

/// Another instance for `a` to be compared with: a catalog image, a
/// same-family instance with fresh parameters, or a different family of the
/// same shape and Hodge type.
fn partner(a: &FamilyInstance, rng: &mut ChaCha8Rng) -> FamilyInstance {
    match rng.random_range(0..3) {
        0 => equivalence_class(a).choose(rng).unwrap().clone(),
        1 => random_instance(spec(), a.id, a.hodge, rng).unwrap(),
        _ => {
            let same_shape: Vec<FamilyId> = FamilyId::all()
                .filter(|id| id.shape() == a.id.shape())
                .collect();
            loop {
                let id = *same_shape.choose(rng).unwrap();
                if let Some(b) = random_instance(spec(), id, a.hodge, rng) {
                    return b;
                }
            }
        }
    }
}

#[test]
fn direct_verdict_agrees_with_catalog_equivalence_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ids: Vec<FamilyId> = FamilyId::all().collect();
    let (mut pairs, mut positive) = (0, 0);
    while pairs < 200 {
        let &(r, s) = HODGE.choose(&mut rng).unwrap();
        let id = *ids.choose(&mut rng).unwrap();
        let Some(a) = random_instance(spec(), id, HodgeType::new(r, s), &mut rng) else {
            continue;
        };
        let b = partner(&a, &mut rng);
        let (ma, mb) = (module(&a), module(&b));
        let direct = iso(&ma, &mb);
        assert_eq!(direct, param_equivalent(&a, &b), "{a:?} vs {b:?}");
        assert_eq!(direct, iso(&mb, &ma), "symmetry for {a:?} vs {b:?}");

        // A basis change never affects the verdict.
        let q = random_invertible(spec(), &mut rng);
        assert_eq!(iso(&ma, &mb.transport(&q).unwrap()), direct);
        pairs += 1;
        positive += usize::from(direct);
    }
    assert!(
        positive > 40 && positive < 160,
        "{positive} isomorphic pairs"
    );
}
