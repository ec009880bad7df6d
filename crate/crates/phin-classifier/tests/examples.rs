use exact_linalg::Subspace;
use phin_classifier::{
    align_monodromy, classify, enumerate_families, instantiate, instantiate_unchecked,
    is_admissible, normalize_phi, param_equivalent, reducibility, ClassifyError, FamilyId,
    FamilyInstance, ReducibilityKind,
};
use phin_core::{FieldElement, FieldSpec, Filtration, HodgeType, Matrix, PhiNModule, Shape, Q64};

fn spec() -> FieldSpec {
    FieldSpec::default()
}

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(spec(), n)
}

fn u_pow(k: i64) -> FieldElement {
    FieldElement::u_pow(spec(), k)
}

fn inst(
    id: &str,
    eigen: Vec<FieldElement>,
    fil: Vec<FieldElement>,
    r: i64,
    s: i64,
) -> FamilyInstance {
    FamilyInstance::new(id.parse().unwrap(), eigen, fil, HodgeType::new(r, s))
}

fn coords(idx: &[usize]) -> Subspace {
    Subspace::coordinate(spec(), 3, idx)
}

#[test]
fn instantiate_cris1_at_weights_one_two() {
    let fi = inst("Cris1", vec![int(2)], vec![], 1, 2);
    let m = instantiate(&fi).unwrap();
    assert_eq!(
        m.phi,
        Matrix::from_ints(spec(), &[&[2, 0, 0], &[1, 2, 0], &[0, 0, 2]])
    );
    assert!(m.n.is_zero());
    assert_eq!(m.fil.l1, coords(&[0]));
    assert_eq!(m.fil.l2, coords(&[0, 2]));
    assert!(is_admissible(&m).unwrap().admissible);
}

#[test]
fn instantiate_r2_3_with_zero_parameters() {
    let fi = inst("R2_3", vec![int(1)], vec![int(0), int(0), int(0)], 1, 2);
    let m = instantiate(&fi).unwrap();
    assert_eq!(
        m.phi,
        Matrix::from_ints(spec(), &[&[4, 0, 0], &[0, 2, 0], &[0, 0, 1]])
    );
    assert_eq!(
        m.n,
        Matrix::from_ints(spec(), &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])
    );
    assert!(is_admissible(&m).unwrap().admissible);
}

#[test]
fn instantiate_rejects_cris26_with_parameter_one() {
    let fi = inst("Cris26", vec![int(4), int(2), int(1)], vec![int(1)], 1, 2);
    match instantiate(&fi) {
        Err(ClassifyError::Constraint { violations, .. }) => {
            assert_eq!(violations, vec!["𝔏 ∉ {0,1} violated".to_string()]);
        }
        other => panic!("expected a constraint error, got {other:?}"),
    }
}

#[test]
fn instantiate_names_the_failed_valuation_condition() {
    let fi = inst("Cris1", vec![u_pow(8)], vec![], 1, 3);
    let err = instantiate(&fi).unwrap_err().to_string();
    assert!(err.contains("s = 2r"), "{err}");
}

#[test]
fn classify_diagonal_example_as_cris14() {
    let phi = Matrix::diag(&[int(4), int(2), int(1)]);
    let fil = Filtration::new(coords(&[0]), coords(&[0, 1]));
    let m = PhiNModule::new(
        spec(),
        HodgeType::new(1, 2),
        phi,
        Matrix::zeros(spec(), 3, 3),
        fil,
        None,
    )
    .unwrap();
    let c = classify(&m).unwrap();
    assert_eq!(
        c.instance,
        inst("Cris14", vec![int(4), int(2), int(1)], vec![], 1, 2)
    );
    assert_eq!(c.transition, Matrix::identity(spec(), 3));
}

#[test]
fn cris2_pattern_below_its_range_is_not_admissible() {
    // (r, s) = (2, 3) violates s >= 2r; v(λ) = 5/3 keeps the total right.
    let fi = inst("Cris2", vec![u_pow(10)], vec![], 2, 3);
    let m = instantiate_unchecked(&fi).unwrap();
    assert!(matches!(classify(&m), Err(ClassifyError::NotAdmissible(_))));
    let report = is_admissible(&m).unwrap();
    assert!(!report.admissible);
    let w = report.witness.unwrap();
    assert!(w.hodge > w.newton);
}

#[test]
fn reducibility_examples() {
    // Cris9 at v(λ) = s/2 with (r, s) = (1, 2): v(λ) = 1, v(λ3) = 1.
    let fi = inst("Cris9", vec![int(2), int(6)], vec![], 1, 2);
    let rep = reducibility(&fi).unwrap();
    assert_eq!(rep.kind, ReducibilityKind::NonSplitReducible);
    assert_eq!(rep.submodules, vec![coords(&[0, 1])]);

    let fi = inst("R2_3", vec![int(1)], vec![int(0), int(0), int(0)], 1, 2);
    let rep = reducibility(&fi).unwrap();
    assert_eq!(rep.kind, ReducibilityKind::NonSplitReducible);
    assert_eq!(rep.submodules, vec![coords(&[2]), coords(&[1, 2])]);

    let fi = inst("Cris4", vec![int(2)], vec![int(5)], 1, 2);
    let rep = reducibility(&fi).unwrap();
    assert_eq!(rep.kind, ReducibilityKind::Irreducible);
    assert!(rep.submodules.is_empty());
}

#[test]
fn enumerate_examples() {
    let h = HodgeType::new(1, 2);
    let rank_two: Vec<_> = enumerate_families(h, Some(2))
        .into_iter()
        .map(|f| f.id)
        .collect();
    assert_eq!(rank_two, vec![FamilyId::RankTwo(3)]);

    // Cris20 asks for s <= 2r, which (1, 2) meets with all three valuations
    // equal to r; only its irreducible branch needs s <= 2r-1. The listed
    // witness is checked against the admissibility oracle and the classifier.
    let crystalline = enumerate_families(h, Some(0));
    let cris20 = crystalline
        .iter()
        .find(|f| f.id == FamilyId::Cris(20))
        .unwrap();
    assert_eq!(cris20.witness, vec![Q64::from_integer(1); 3]);
    let fi = inst("Cris20", vec![int(2), int(6), int(10)], vec![], 1, 2);
    let m = instantiate(&fi).unwrap();
    assert!(is_admissible(&m).unwrap().admissible);
    assert!(param_equivalent(&classify(&m).unwrap().instance, &fi));
    assert_eq!(
        reducibility(&fi).unwrap().kind,
        ReducibilityKind::NonSplitReducible
    );
    assert!(!enumerate_families(HodgeType::new(1, 3), Some(0))
        .iter()
        .any(|f| f.id == FamilyId::Cris(20)));

    let r15 = enumerate_families(HodgeType::new(2, 3), Some(1))
        .into_iter()
        .find(|f| f.id == FamilyId::RankOne(15))
        .unwrap();
    assert_eq!(r15.conditions[0], "(r-1)/2 ≤ v(λ) ≤ r-1");
    assert!(r15.witness[0] >= Q64::new(1, 2) && r15.witness[0] <= Q64::from_integer(1));
}

#[test]
fn param_equivalence_examples() {
    let x = int(3);
    // Swapping λ1 and λ2 stays inside the family only when their valuations tie.
    let a = inst(
        "Cris26",
        vec![int(4), int(2), int(1)],
        vec![x.clone()],
        1,
        2,
    );
    let b = inst(
        "Cris26",
        vec![int(2), int(4), int(1)],
        vec![&int(1) - &x],
        1,
        2,
    );
    assert!(a.violations().is_empty() && !b.violations().is_empty());
    assert!(!param_equivalent(&a, &b));
    let a = inst(
        "Cris26",
        vec![int(2), int(6), int(10)],
        vec![x.clone()],
        1,
        2,
    );
    let b = inst(
        "Cris26",
        vec![int(6), int(2), int(10)],
        vec![&int(1) - &x],
        1,
        2,
    );
    assert!(param_equivalent(&a, &b));
    let c = inst(
        "Cris26",
        vec![int(2), int(10), int(6)],
        vec![x.inv().unwrap()],
        1,
        2,
    );
    assert!(param_equivalent(&a, &c));
    let d = inst(
        "Cris26",
        vec![int(2), int(10), int(6)],
        vec![x.clone()],
        1,
        2,
    );
    assert!(!param_equivalent(&a, &d));

    // Cris17 needs v(λ3) = r, v(λ1) + v(λ2) = s, s >= 2r: (r, s) = (1, 2), all valuations 1.
    let (m1, m2, m3) = (int(2), int(6), int(10));
    let a = inst(
        "Cris17",
        vec![m1.clone(), m2.clone(), m3.clone()],
        vec![],
        1,
        2,
    );
    let b = inst(
        "Cris19",
        vec![m3.clone(), m2.clone(), m1.clone()],
        vec![],
        1,
        2,
    );
    assert!(a.violations().is_empty() && b.violations().is_empty());
    assert!(param_equivalent(&a, &b));
    assert!(param_equivalent(&b, &a));

    let a = inst("R1_3", vec![u_pow(12)], vec![int(1)], 3, 4);
    let b = inst("R1_3", vec![u_pow(12)], vec![int(2)], 3, 4);
    assert!(a.violations().is_empty());
    assert!(!param_equivalent(&a, &b));
}

#[test]
fn align_monodromy_examples() {
    let zero = Matrix::zeros(spec(), 3, 3);
    let (n, t) = align_monodromy(&zero).unwrap();
    assert!(n.is_zero());
    assert_eq!(t, Matrix::identity(spec(), 3));

    // N e2 = e1.
    let n1 = Matrix::from_ints(spec(), &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let (std, t) = align_monodromy(&n1).unwrap();
    assert_eq!(
        std,
        Matrix::from_ints(spec(), &[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]])
    );
    assert_eq!(t.conjugate(&n1).unwrap(), std);

    // A rank-2 nilpotent in a scrambled basis.
    let q = Matrix::from_ints(spec(), &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
    let chain = Matrix::from_ints(spec(), &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
    let n2 = q.inverse().unwrap().conjugate(&chain).unwrap();
    let (std, t) = align_monodromy(&n2).unwrap();
    assert_eq!(std, chain);
    assert_eq!(t.conjugate(&n2).unwrap(), chain);

    assert!(align_monodromy(&Matrix::identity(spec(), 3)).is_err());
}

#[test]
fn normalize_phi_examples() {
    let p = int(2);
    let x = int(3);
    // Rank 1 with y = x and w != 0.
    let phi = Matrix::from_rows(vec![
        vec![&p * &x, int(0), int(0)],
        vec![int(5), x.clone(), int(0)],
        vec![int(-1), int(7), x.clone()],
    ])
    .unwrap();
    let (shape, eigen, std, t) = normalize_phi(&phi, 1, None).unwrap();
    assert_eq!(shape, Shape::RankOne(2));
    assert_eq!(eigen, vec![x.clone()]);
    assert_eq!(t.conjugate(&phi).unwrap(), std);

    // Rank 2 with generic y, z.
    let (y, z) = (int(5), int(-3));
    let phi = Matrix::from_rows(vec![
        vec![&(&p * &p) * &x, int(0), int(0)],
        vec![&p * &y, &p * &x, int(0)],
        vec![z, y, x.clone()],
    ])
    .unwrap();
    let (shape, _, std, t) = normalize_phi(&phi, 2, None).unwrap();
    assert_eq!(shape, Shape::RankTwo);
    assert_eq!(std, Matrix::diag(&[int(12), int(6), int(3)]));
    assert_eq!(t.conjugate(&phi).unwrap(), std);

    // Diagonal with distinct eigenvalues is already standard.
    let phi = Matrix::diag(&[int(1), int(4), int(2)]);
    let (shape, eigen, std, _) = normalize_phi(&phi, 0, None).unwrap();
    assert_eq!(shape, Shape::Crystalline(6));
    assert_eq!(eigen, vec![int(4), int(2), int(1)]);
    assert_eq!(std, Matrix::diag(&[int(4), int(2), int(1)]));
}

#[test]
fn non_triangular_phi_needs_a_hint() {
    let phi = Matrix::from_ints(spec(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
    assert!(matches!(
        normalize_phi(&phi, 0, None),
        Err(ClassifyError::Eigenvalues(_))
    ));
}
