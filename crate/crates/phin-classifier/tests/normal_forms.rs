//! The normal-form reduction checked against explicit basis changes.

use phin_classifier::sample::random_invertible;
use phin_classifier::{classify, instantiate, normalize, normalize_phi, FamilyId, FamilyInstance};
use phin_core::{
    standard_n, standard_phi, FieldElement, FieldSpec, HodgeType, JordanHint, Matrix, PhiNModule,
    Shape,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec() -> FieldSpec {
    FieldSpec::default()
}

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(spec(), n)
}

fn div(a: &FieldElement, b: &FieldElement) -> FieldElement {
    a.checked_div(b).unwrap()
}

fn rows(r: [[&FieldElement; 3]; 3]) -> Matrix {
    Matrix::from_rows(
        r.iter()
            .map(|row| row.iter().map(|&x| x.clone()).collect())
            .collect(),
    )
    .unwrap()
}

/// `phi e1 = px e1 + u e2 + v e3`, `phi e2 = y e2 + w e3`, `phi e3 = x e3`.
fn rank_one_phi(
    x: &FieldElement,
    y: &FieldElement,
    u: &FieldElement,
    v: &FieldElement,
    w: &FieldElement,
) -> Matrix {
    let z = int(0);
    let px = &int(2) * x;
    rows([[&px, &z, &z], [u, y, &z], [v, w, x]])
}

struct RankOneCase {
    shape: Shape,
    y: FieldElement,
    u: FieldElement,
    w: FieldElement,
    p_matrix: Matrix,
}

/// The five basis changes for the rank-1 shapes, with `p = 2`, `x = 3`,
/// `v = 7` and the listed `y`, `u`, `w`.
fn rank_one_cases() -> Vec<RankOneCase> {
    let (z, one) = (int(0), int(1));
    let p = int(2);
    let x = int(3);
    let v = int(7);
    let q = &one - &p; // 1 - p
    let xq = &x * &q;
    let xq2 = &xq * &xq;
    let mut out = Vec::new();

    let (u, w) = (int(5), int(0));
    let m = rows([
        [&one, &z, &z],
        [&div(&u, &xq), &one, &z],
        [&div(&v, &xq), &z, &one],
    ]);
    out.push(RankOneCase {
        shape: Shape::RankOne(1),
        y: x.clone(),
        u,
        w,
        p_matrix: m,
    });

    let (u, w) = (int(5), int(-4));
    let uw = &u * &w;
    let m = rows([
        [&one, &z, &z],
        [&div(&uw, &xq), &w, &z],
        [&div(&(&(&v * &xq) - &uw), &xq2), &z, &one],
    ]);
    out.push(RankOneCase {
        shape: Shape::RankOne(2),
        y: x.clone(),
        u,
        w,
        p_matrix: m,
    });

    let (u, w) = (int(0), int(-4));
    let m = rows([
        [&one, &z, &z],
        [&z, &one, &z],
        [&div(&v, &xq), &div(&w, &xq), &one],
    ]);
    out.push(RankOneCase {
        shape: Shape::RankOne(3),
        y: &p * &x,
        u,
        w,
        p_matrix: m,
    });

    let (u, w) = (int(5), int(-4));
    let uw = &u * &w;
    let corner = div(&(&(&u * &uw) + &(&(&u * &v) * &xq)), &xq2);
    let m = rows([[&u, &z, &z], [&z, &one, &z], [&corner, &div(&uw, &xq), &u]]);
    out.push(RankOneCase {
        shape: Shape::RankOne(4),
        y: &p * &x,
        u,
        w,
        p_matrix: m,
    });

    let (u, w) = (int(5), int(-4));
    let y = int(11);
    let corner = div(
        &(&(&(&v * &x) - &(&v * &y)) + &(&u * &w)),
        &(&(&x * &(&x - &y)) * &q),
    );
    let m = rows([
        [&one, &z, &z],
        [&div(&u, &(&y - &(&p * &x))), &one, &z],
        [&corner, &div(&w, &(&x - &y)), &one],
    ]);
    out.push(RankOneCase {
        shape: Shape::RankOne(5),
        y,
        u,
        w,
        p_matrix: m,
    });
    out
}

#[test]
fn rank_one_basis_changes_reach_the_standard_shapes() {
    let x = int(3);
    let n = standard_n(spec(), 1).unwrap();
    for case in rank_one_cases() {
        let phi = rank_one_phi(&x, &case.y, &case.u, &int(7), &case.w);
        let eigen = if case.shape == Shape::RankOne(5) {
            vec![x.clone(), case.y.clone()]
        } else {
            vec![x.clone()]
        };
        let target = standard_phi(case.shape, &eigen).unwrap();
        assert_eq!(
            case.p_matrix.conjugate(&phi).unwrap(),
            target,
            "{}",
            case.shape
        );
        assert_eq!(case.p_matrix.conjugate(&n).unwrap(), n, "{}", case.shape);

        let (shape, found_eigen, std, t) = normalize_phi(&phi, 1, None).unwrap();
        assert_eq!((shape, found_eigen, &std), (case.shape, eigen, &target));
        assert_eq!(t.conjugate(&phi).unwrap(), target);
        assert_eq!(t.conjugate(&n).unwrap(), n);
    }
}

#[test]
fn rank_two_basis_change_diagonalizes() {
    let (p, x, y, z) = (int(2), int(3), int(5), int(-7));
    let one = int(1);
    let zero = int(0);
    let q = &one - &p;
    let xq = &x * &q;
    let p2x = &(&p * &p) * &x;
    let phi = rows([
        [&p2x, &zero, &zero],
        [&(&p * &y), &(&p * &x), &zero],
        [&z, &y, &x],
    ]);
    let corner = div(
        &(&(&p * &(&y * &y)) + &(&z * &xq)),
        &(&(&(&x * &x) * &q) * &(&one - &(&p * &p))),
    );
    let m = rows([
        [&one, &zero, &zero],
        [&div(&y, &xq), &one, &zero],
        [&corner, &div(&y, &xq), &one],
    ]);
    let n = standard_n(spec(), 2).unwrap();
    let target = Matrix::diag(&[p2x, &p * &x, x.clone()]);
    assert_eq!(m.conjugate(&phi).unwrap(), target);
    assert_eq!(m.conjugate(&n).unwrap(), n);
    let (shape, _, std, t) = normalize_phi(&phi, 2, None).unwrap();
    assert_eq!((shape, &std), (Shape::RankTwo, &target));
    assert_eq!(t.conjugate(&phi).unwrap(), target);
}

#[test]
fn cris2_substitution_moves_a_general_flag_to_the_pattern() {
    // L1 = E(e1 + a e2 + b e3), L2 = E(e1 + a e2 + b e3, e3) under the
    // single Jordan block; e1 -> e1 - a e2 + (a^2 - b) e3, e2 -> e2 - a e3
    // carries it onto the Cris2 representative without touching phi.
    let (a, b) = (int(3), int(-2));
    let lambda = FieldElement::u_pow(spec(), 6);
    let h = HodgeType::new(1, 2);
    let rep = instantiate(&FamilyInstance::new(
        FamilyId::Cris(2),
        vec![lambda.clone()],
        vec![],
        h,
    ))
    .unwrap();
    let zero = int(0);
    let one = int(1);
    let g = rows([
        [&one, &zero, &zero],
        [&-&a, &one, &zero],
        [&(&(&a * &a) - &b), &-&a, &one],
    ]);
    let x = vec![one.clone(), a.clone(), b.clone()];
    let e3 = vec![zero.clone(), zero.clone(), one.clone()];
    let fil = phin_core::Filtration::new(
        phin_core::Subspace::span(spec(), 3, &[x.clone()]).unwrap(),
        phin_core::Subspace::span(spec(), 3, &[x, e3]).unwrap(),
    );
    let m = PhiNModule::new(spec(), h, rep.phi.clone(), rep.n.clone(), fil, None).unwrap();
    assert_eq!(g.conjugate(&m.phi).unwrap(), rep.phi);
    assert_eq!(m.fil.transport(&g).unwrap(), rep.fil);

    let c = classify(&m).unwrap();
    assert_eq!(c.instance.id, FamilyId::Cris(2));
    assert_eq!(m.transport(&c.transition).unwrap(), rep);
}

fn any_shape() -> impl Strategy<Value = Shape> {
    proptest::sample::select(Shape::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A standard pair in a random basis normalizes back to the same shape
    /// and standard matrix, through a transition that conjugates correctly.
    #[test]
    fn normalization_inverts_random_basis_changes(shape in any_shape(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eigen: Vec<FieldElement> = [int(3), FieldElement::u_pow(spec(), 4), int(-5)][..shape.eigen_arity()].to_vec();
        let phi = standard_phi(shape, &eigen).unwrap();
        let n = standard_n(spec(), shape.n_rank()).unwrap();
        let q = random_invertible(spec(), &mut rng);
        let (phi_q, n_q) = (q.conjugate(&phi).unwrap(), q.conjugate(&n).unwrap());
        let charpoly_eigen: Vec<FieldElement> = (0..3).map(|i| phi.get(i, i).clone()).collect();
        let hint = JordanHint { eigenvalues: charpoly_eigen, change_of_basis: None };
        let l1 = phin_core::Subspace::coordinate(spec(), 3, &[0]);
        let l2 = phin_core::Subspace::coordinate(spec(), 3, &[0, 1]);
        let m = PhiNModule::new(
            spec(), HodgeType::new(1, 2), phi_q, n_q,
            phin_core::Filtration::new(l1, l2), (shape.n_rank() == 0).then_some(hint),
        ).unwrap();
        let norm = normalize(&m).unwrap();
        prop_assert_eq!(norm.shape, shape);
        // Eigenvalues come back sorted, so compare as multisets.
        let (mut got, mut want) = (norm.eigen.clone(), eigen.clone());
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        prop_assert_eq!(&norm.phi, &standard_phi(shape, &norm.eigen).unwrap());
        prop_assert_eq!(norm.transition.conjugate(&m.phi).unwrap(), norm.phi.clone());
        prop_assert_eq!(norm.transition.conjugate(&m.n).unwrap(), n);
    }
}
