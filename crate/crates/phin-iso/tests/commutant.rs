use phin_core::{FieldElement, FieldSpec, Shape};
use phin_iso::{commutant_shape_check, commutant_shape_check_with};
use proptest::prelude::*;

/// Dimensions counted by hand from `P phi = phi P`, `P N = N P`.
const DIMENSIONS: [(Shape, usize); 12] = [
    (Shape::Crystalline(1), 9),
    (Shape::Crystalline(2), 5),
    (Shape::Crystalline(3), 3),
    (Shape::Crystalline(4), 5),
    (Shape::Crystalline(5), 3),
    (Shape::Crystalline(6), 3),
    (Shape::RankOne(1), 3),
    (Shape::RankOne(2), 2),
    (Shape::RankOne(3), 3),
    (Shape::RankOne(4), 2),
    (Shape::RankOne(5), 2),
    (Shape::RankTwo, 1),
];

#[test]
fn every_standard_shape_matches_its_template() {
    for (shape, dim) in DIMENSIONS {
        let report = commutant_shape_check(shape).unwrap();
        assert_eq!(report.dim, dim, "{shape}");
        let perms = if shape == Shape::Crystalline(6) { 6 } else { 0 };
        assert_eq!(report.permutations_checked, perms, "{shape}");
    }
}

fn element() -> impl Strategy<Value = FieldElement> {
    (-9i64..=9, 1i64..=4, 0i64..6).prop_filter_map("nonzero", |(n, d, k)| {
        let spec = FieldSpec::default();
        (n != 0).then(|| &FieldElement::from_frac(spec, n, d) * &FieldElement::u_pow(spec, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The pattern does not depend on the eigenvalues, as long as they keep
    /// the shape.
    #[test]
    fn templates_hold_for_other_eigenvalues(
        idx in 0usize..12,
        eigen in proptest::collection::vec(element(), 3),
    ) {
        let (shape, dim) = DIMENSIONS[idx];
        let eigen = &eigen[..shape.eigen_arity()];
        // Skip parameter choices that degenerate into another shape.
        prop_assume!(phin_core::standard_phi(shape, eigen).is_ok());
        prop_assert_eq!(commutant_shape_check_with(shape, eigen).unwrap().dim, dim);
    }
}
