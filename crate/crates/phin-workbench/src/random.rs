//! Random modules for the certification campaign.
//!
//! The rank of `N` is uniform in `{0, 1, 2}` and the shape uniform among
//! that rank's shapes. Eigenvalues are `unit * u^k` with valuations from
//! the grid, filtration vectors have small rational coordinates (zero a
//! third of the time, so special positions come up), and the result is
//! written in a random basis.

use phin_classifier::sample::random_invertible;
use phin_classifier::valuation_grid;
use phin_core::{
    standard_n, standard_phi, FieldElement, FieldSpec, Filtration, HodgeType, JordanHint, Matrix, PhiNModule, Shape,
    Subspace,
};
use rand::seq::IndexedRandom;
use rand::Rng;

const UNITS: [(i64, i64); 6] = [(1, 1), (-1, 1), (3, 1), (1, 3), (5, 1), (-3, 5)];

fn random_shape<R: Rng + ?Sized>(rng: &mut R) -> Shape {
    let rank = rng.random_range(0..3);
    let shapes: Vec<Shape> = Shape::ALL.iter().copied().filter(|s| s.n_rank() == rank).collect();
    *shapes.choose(rng).expect("every rank has a shape")
}

fn coordinate<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> FieldElement {
    if rng.random_bool(1.0 / 3.0) {
        FieldElement::zero(spec)
    } else {
        FieldElement::from_frac(spec, rng.random_range(-3..=3), rng.random_range(1..=2))
    }
}

fn random_vector<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> Vec<FieldElement> {
    (0..3).map(|_| coordinate(spec, rng)).collect()
}

/// A flag `L1 ⊂ L2` with `dim L1 = 1`, `dim L2 = 2`.
fn random_flag<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> Filtration {
    loop {
        let (x, y) = (random_vector(spec, rng), random_vector(spec, rng));
        let l1 = Subspace::span(spec, 3, &[x.clone()]).expect("3-vectors");
        let l2 = Subspace::span(spec, 3, &[x, y]).expect("3-vectors");
        if l1.dim() == 1 && l2.dim() == 2 {
            return Filtration::new(l1, l2);
        }
    }
}

/// A standard `(phi, N)` pair with random eigenvalues whose valuations
/// make `t_N(D) = r + s`.
fn random_pair<R: Rng + ?Sized>(spec: FieldSpec, h: HodgeType, rng: &mut R) -> (Shape, Matrix, Matrix) {
    loop {
        let shape = random_shape(rng);
        let grid = valuation_grid(shape, h, spec.ramification());
        let Some(vals) = grid.choose(rng) else { continue };
        let e = i64::from(spec.ramification());
        let eigen: Vec<FieldElement> = vals
            .iter()
            .map(|v| {
                let &(n, d) = UNITS.choose(rng).expect("non-empty");
                let k = (v * e).to_integer();
                &FieldElement::from_frac(spec, n, d) * &FieldElement::u_pow(spec, k)
            })
            .collect();
        if let Ok(phi) = standard_phi(shape, &eigen) {
            let n = standard_n(spec, shape.n_rank()).expect("rank at most 2");
            return (shape, phi, n);
        }
    }
}

/// A valid module of Hodge type `h`, admissible or not. Crystalline
/// modules carry their eigenvalues as a Jordan hint.
pub fn random_module<R: Rng + ?Sized>(spec: FieldSpec, h: HodgeType, rng: &mut R) -> PhiNModule {
    let (shape, phi, n) = random_pair(spec, h, rng);
    let jordan = (shape.n_rank() == 0).then(|| JordanHint {
        eigenvalues: (0..3).map(|i| phi.get(i, i).clone()).collect(),
        change_of_basis: None,
    });
    let fil = random_flag(spec, rng);
    let m = PhiNModule::new(spec, h, phi, n, fil, jordan).expect("standard pairs are valid");
    m.transport(&random_invertible(spec, rng)).expect("invertible basis change")
}
