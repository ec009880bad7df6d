use exact_linalg::{int_vector, Matrix, Subspace};
use phin_core::{
    check_admissibility, hodge_invariant, invariant_families, newton_invariant, standard_n, standard_phi,
    Filtration, HodgeType, ModuleDoc, PhiNModule, Shape, Violation,
};
use valued_field::{FieldElement, FieldSpec, Q64};

fn spec() -> FieldSpec {
    FieldSpec::default()
}

fn e(n: i64) -> FieldElement {
    FieldElement::from_int(spec(), n)
}

fn span(vs: &[&[i64]]) -> Subspace {
    let vs: Vec<_> = vs.iter().map(|v| int_vector(spec(), v)).collect();
    Subspace::span(spec(), 3, &vs).unwrap()
}

fn q(n: i64) -> Q64 {
    Q64::from_integer(n)
}

/// Eigenvalues generic enough that no accidental coincidences occur.
fn generic_eigen(shape: Shape) -> Vec<FieldElement> {
    [3, 5, 7][..shape.eigen_arity()].iter().map(|&x| e(x)).collect()
}

fn standard_module(shape: Shape, eigen: &[FieldElement], h: (i64, i64), l1: &[i64], l2: &[&[i64]]) -> PhiNModule {
    PhiNModule::new(
        spec(),
        HodgeType::new(h.0, h.1),
        standard_phi(shape, eigen).unwrap(),
        standard_n(spec(), shape.n_rank()).unwrap(),
        Filtration::new(span(&[l1]), span(l2)),
        None,
    )
    .unwrap()
}

#[test]
fn validation_examples() {
    let m = standard_module(Shape::RankTwo, &[e(1)], (1, 2), &[1, 0, 0], &[&[1, 0, 0], &[0, 1, 0]]);
    assert!(m.validate().is_empty());

    let mut bad = m.clone();
    bad.n = Matrix::identity(spec(), 3);
    assert!(bad.validate().contains(&Violation::NotNilpotent));

    let mut bad = m.clone();
    bad.phi = Matrix::diag(&[e(3), e(3), e(3)]);
    bad.n = standard_n(spec(), 1).unwrap();
    assert_eq!(bad.validate(), vec![Violation::MonodromyRelation]);

    let mut bad = m.clone();
    bad.hodge = HodgeType::new(2, 2);
    let v = bad.validate();
    assert_eq!(v, vec![Violation::HodgeOrder { r: 2, s: 2 }]);
    assert!(v[0].to_string().starts_with("Hodge type requires 0<r<s"));

    let mut bad = m;
    bad.fil.l1 = span(&[&[0, 0, 1]]);
    assert_eq!(bad.validate(), vec![Violation::FiltrationNotNested]);
}

#[test]
fn hodge_invariant_examples() {
    let fil = Filtration::new(span(&[&[1, 0, 0]]), span(&[&[1, 0, 0], &[0, 1, 0]]));
    let h = HodgeType::new(1, 2);
    assert_eq!(hodge_invariant(&Subspace::full(spec(), 3), &fil, h).unwrap(), q(3));
    assert_eq!(hodge_invariant(&fil.l1, &fil, h).unwrap(), q(2));
    assert_eq!(hodge_invariant(&span(&[&[1, 1, 0]]), &fil, h).unwrap(), q(1));
    assert_eq!(hodge_invariant(&span(&[&[0, 0, 1]]), &fil, h).unwrap(), q(0));
}

#[test]
fn newton_invariant_examples() {
    let u3 = FieldElement::u_pow(spec(), 3);
    let phi = Matrix::diag(&[e(4), u3.clone(), e(3)]);
    assert_eq!(newton_invariant(&Subspace::full(spec(), 3), &phi).unwrap(), Q64::new(5, 2));

    let lambda = FieldElement::u_pow(spec(), 2);
    let r1 = standard_phi(Shape::RankOne(3), &[lambda.clone()]).unwrap();
    assert_eq!(newton_invariant(&span(&[&[0, 0, 1]]), &r1).unwrap(), Q64::new(1, 3));

    let r2 = standard_phi(Shape::RankTwo, &[lambda]).unwrap();
    assert_eq!(newton_invariant(&span(&[&[0, 1, 0], &[0, 0, 1]]), &r2).unwrap(), Q64::new(2 * 1 + 3, 3));

    assert!(newton_invariant(&span(&[&[1, 0, 0]]), &r2).is_ok());
    let block = standard_phi(Shape::Crystalline(3), &[e(3)]).unwrap();
    assert!(newton_invariant(&span(&[&[1, 0, 0]]), &block).is_err());
}

fn family_strings(shape: Shape) -> Vec<String> {
    let phi = standard_phi(shape, &generic_eigen(shape)).unwrap();
    let n = standard_n(spec(), shape.n_rank()).unwrap();
    invariant_families(&phi, &n, shape).unwrap().iter().map(ToString::to_string).collect()
}

#[test]
fn family_examples() {
    assert_eq!(family_strings(Shape::Crystalline(3)), ["E(e3)", "E(e2, e3)"]);
    assert_eq!(family_strings(Shape::RankTwo), ["E(e3)", "E(e2, e3)"]);
    assert_eq!(
        family_strings(Shape::RankOne(3)),
        ["E(e2)", "E(e3)", "{U : E(e3) ⊆ U ⊆ E(e1, e2, e3), dim U = 2}"]
    );
    assert_eq!(
        family_strings(Shape::Crystalline(2)),
        ["{U : 0 ⊆ U ⊆ E(e2, e3), dim U = 1}", "{U : E(e2) ⊆ U ⊆ E(e1, e2, e3), dim U = 2}"]
    );
}

/// Every line and plane spanned by small integer vectors that is stable
/// under the standard pair lies in exactly one catalogued family, and every
/// catalogued family member found this way is stable.
#[test]
fn families_are_complete_on_integer_grid() {
    let range = -2..=2i64;
    let mut vectors = Vec::new();
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                if (a, b, c) != (0, 0, 0) {
                    vectors.push(int_vector(spec(), &[a, b, c]));
                }
            }
        }
    }
    for shape in Shape::ALL {
        let phi = standard_phi(shape, &generic_eigen(shape)).unwrap();
        let n = standard_n(spec(), shape.n_rank()).unwrap();
        let families = invariant_families(&phi, &n, shape).unwrap();
        let mut subspaces = std::collections::HashSet::new();
        for v in &vectors {
            subspaces.insert(Subspace::span(spec(), 3, std::slice::from_ref(v)).unwrap());
            // A plane is the kernel of a functional; the span of the
            // annihilator of a line gives every rational plane.
            let line = Subspace::span(spec(), 3, std::slice::from_ref(v)).unwrap();
            subspaces.insert(Subspace::span(spec(), 3, &line.annihilator()).unwrap());
        }
        let mut stable = 0;
        for u in subspaces {
            let is_stable = u.is_invariant(&phi).unwrap() && u.is_invariant(&n).unwrap();
            let hits = families.iter().filter(|f| f.contains_member(&u).unwrap()).count();
            if is_stable {
                stable += 1;
                assert_eq!(hits, 1, "{shape}: stable {u} lies in {hits} families");
            } else {
                assert_eq!(hits, 0, "{shape}: unstable {u} lies in a family");
            }
        }
        assert!(stable >= families.len(), "{shape}");
    }
}

#[test]
fn max_hodge_examples() {
    let h = HodgeType::new(1, 2);
    let shape = Shape::Crystalline(2);
    let phi = standard_phi(shape, &[e(3)]).unwrap();
    let n = standard_n(spec(), 0).unwrap();
    let fams = invariant_families(&phi, &n, shape).unwrap();

    // Lines in E(e2, e3) with L2 meeting that plane but L1 outside it.
    let fil = Filtration::new(span(&[&[1, 0, 0]]), span(&[&[1, 0, 0], &[0, 1, 1]]));
    assert_eq!(fams[0].max_hodge(&fil, h).unwrap(), q(1));
    // Planes through e2 can pick up L1 but never all of L2, since e2 is not in L2.
    assert_eq!(fams[1].max_hodge(&fil, h).unwrap(), q(2));
    let fil = Filtration::new(span(&[&[1, 0, 0]]), span(&[&[1, 0, 0], &[0, 1, 0]]));
    assert_eq!(fams[1].max_hodge(&fil, h).unwrap(), q(3));

    let shape = Shape::Crystalline(3);
    let phi = standard_phi(shape, &[e(3)]).unwrap();
    let fams = invariant_families(&phi, &n, shape).unwrap();
    let fil = Filtration::new(span(&[&[0, 1, 0]]), span(&[&[0, 1, 0], &[1, 0, 0]]));
    assert_eq!(fams[1].max_hodge(&fil, h).unwrap(), q(2));
}

#[test]
fn admissibility_examples() {
    let check = |m: &PhiNModule, shape| {
        let fams = invariant_families(&m.phi, &m.n, shape).unwrap();
        check_admissibility(m, &fams).unwrap()
    };

    // phi scalar: the line L1 always breaks the inequality.
    let m = standard_module(Shape::Crystalline(1), &[e(2)], (1, 2), &[1, 1, 0], &[&[1, 1, 0], &[0, 1, 3]]);
    let report = check(&m, Shape::Crystalline(1));
    assert!(!report.admissible);
    let w = report.witness.unwrap();
    assert_eq!(w.member, m.fil.l1);
    assert_eq!((w.hodge, w.newton), (q(2), q(1)));

    // Rank two, L1 = E(e2 + e3) inside E(e2, e3) while s > 2r - 3.
    let m = standard_module(Shape::RankTwo, &[e(1)], (1, 2), &[0, 1, 1], &[&[0, 1, 1], &[1, 0, 1]]);
    let report = check(&m, Shape::RankTwo);
    assert!(!report.admissible);
    assert_eq!(report.witness.unwrap().member, span(&[&[0, 1, 0], &[0, 0, 1]]));

    // Rank two with Fil^s = E e1, Fil^r = E(e1, e2).
    let m = standard_module(Shape::RankTwo, &[e(1)], (1, 2), &[1, 0, 0], &[&[1, 0, 0], &[0, 1, 0]]);
    let report = check(&m, Shape::RankTwo);
    assert!(report.admissible, "{report:?}");
    assert_eq!(report.hodge_total, report.newton_total);

    // Wrong total.
    let m = standard_module(Shape::RankTwo, &[e(2)], (1, 2), &[1, 0, 0], &[&[1, 0, 0], &[0, 1, 0]]);
    let report = check(&m, Shape::RankTwo);
    assert!(!report.admissible);
    assert!(report.witness.unwrap().family.is_none());
}

#[test]
fn transport_preserves_invariants() {
    let m = standard_module(Shape::RankOne(5), &[e(3), e(5)], (1, 4), &[1, 1, 1], &[&[1, 1, 1], &[0, 1, 2]]);
    let qm = Matrix::from_ints(spec(), &[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
    let t = m.transport(&qm).unwrap();
    assert!(t.validate().is_empty());
    let fams = invariant_families(&m.phi, &m.n, Shape::RankOne(5)).unwrap();
    for f in &fams {
        let g = f.transport(&qm).unwrap();
        let u = g.max_member(&t.fil).unwrap();
        assert!(u.is_invariant(&t.phi).unwrap() && u.is_invariant(&t.n).unwrap());
        assert_eq!(newton_invariant(&u, &t.phi).unwrap(), f.newton());
        assert_eq!(
            hodge_invariant(&u, &t.fil, t.hodge).unwrap(),
            f.max_hodge(&m.fil, m.hodge).unwrap()
        );
    }
}

#[test]
fn document_round_trip() {
    let m = standard_module(Shape::Crystalline(5), &[e(3), e(5)], (1, 2), &[1, 0, 2], &[&[1, 0, 2], &[0, 1, 0]]);
    let doc = ModuleDoc::from_module(&m);
    let text = serde_json::to_string(&doc).unwrap();
    let back: ModuleDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_module().unwrap(), m);

    let short = r#"{
        "field": {"prime": 2, "ramification": 6},
        "hodge": {"r": 1, "s": 2},
        "phi": [[3, 0, 0], [1, 3, 0], [0, 0, 5]],
        "N": [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        "fil_s": [[1, 0, 2]],
        "fil_r": [[1, 0, 2], ["0", ["1", "0", "0", "0", "0", "0"], "0/1"]]
    }"#;
    let doc: ModuleDoc = serde_json::from_str(short).unwrap();
    assert_eq!(doc.to_module().unwrap(), m);

    let bad = short.replace("\"r\": 1", "\"r\": 3");
    let doc: ModuleDoc = serde_json::from_str(&bad).unwrap();
    let err = doc.to_module().unwrap_err().to_string();
    assert!(err.contains("Hodge type requires 0<r<s"), "{err}");
}
