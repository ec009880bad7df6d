use phin_core::{FieldElement, FieldSpec, HodgeType, Shape, Q64};

use crate::catalog::{self, ParamDomain, Vals};
use crate::{FamilyId, FamilyInstance};

/// A family whose conditions can be met at a given Hodge type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub id: FamilyId,
    /// The family's valuation conditions, as stated in the catalog.
    pub conditions: Vec<&'static str>,
    /// One admissible choice of eigenvalue valuations.
    pub witness: Vec<Q64>,
}

/// `t_N(D) = (sum of weighted eigenvalue valuations) + shift` for each shape:
/// the eigenvalue weights and the power of `p` in `det phi`.
fn det_profile(shape: Shape) -> (&'static [i64], i64) {
    match shape {
        Shape::Crystalline(1..=3) => (&[3], 0),
        Shape::Crystalline(4 | 5) => (&[2, 1], 0),
        Shape::Crystalline(_) => (&[1, 1, 1], 0),
        Shape::RankOne(1 | 2) => (&[3], 1),
        Shape::RankOne(3 | 4) => (&[3], 2),
        Shape::RankOne(_) => (&[2, 1], 1),
        Shape::RankTwo => (&[3], 3),
    }
}

/// All valuation tuples on the `(1/e)Z` grid in `[0, r+s]` with
/// `t_N(D) = r + s`, for the given shape.
pub fn valuation_grid(shape: Shape, h: HodgeType, e: u32) -> Vec<Vec<Q64>> {
    let (weights, shift) = det_profile(shape);
    let e = e as i64;
    let top = (h.r + h.s) * e;
    let target = (h.r + h.s - shift) * e;
    let mut out = Vec::new();
    let free = weights.len() - 1;
    let mut current = vec![0i64; free];
    loop {
        let used: i64 = current.iter().zip(weights).map(|(a, w)| a * w).sum();
        let last_w = weights[free];
        let rest = target - used;
        if rest >= 0 && rest % last_w == 0 && rest / last_w <= top {
            let mut tuple: Vec<Q64> = current.iter().map(|&a| Q64::new(a, e)).collect();
            tuple.push(Q64::new(rest / last_w, e));
            out.push(tuple);
        }
        let mut i = 0;
        loop {
            if i == free {
                return out;
            }
            current[i] += 1;
            if current[i] <= top {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// Families (optionally only those with the given rank of `N`) whose
/// valuation conditions have a solution on the `(1/6)Z` grid.
pub fn enumerate_families(h: HodgeType, n_rank: Option<usize>) -> Vec<FamilyReport> {
    enumerate_families_in(FieldSpec::default(), h, n_rank)
}

pub fn enumerate_families_in(
    spec: FieldSpec,
    h: HodgeType,
    n_rank: Option<usize>,
) -> Vec<FamilyReport> {
    if !h.is_valid() {
        return Vec::new();
    }
    FamilyId::all()
        .filter(|id| n_rank.is_none_or_eq(id.n_rank()))
        .filter_map(|id| {
            let conds = catalog::conditions(id);
            valuation_grid(id.shape(), h, spec.ramification())
                .into_iter()
                .find(|v| conds.iter().all(|c| c.holds(&Vals::new(h, v))))
                .map(|witness| FamilyReport {
                    id,
                    conditions: conds.iter().map(|c| c.text).collect(),
                    witness,
                })
        })
        .collect()
}

trait OptionEq {
    fn is_none_or_eq(&self, x: usize) -> bool;
}

impl OptionEq for Option<usize> {
    fn is_none_or_eq(&self, x: usize) -> bool {
        self.map_or(true, |k| k == x)
    }
}

/// An eigenvalue with the given valuation and a chosen unit part.
pub fn element_with_valuation(spec: FieldSpec, v: Q64, unit: i64) -> FieldElement {
    let k = v * Q64::from_integer(spec.ramification() as i64);
    assert!(k.is_integer(), "valuation {v} is not on the (1/e)Z grid");
    FieldElement::u_pow(spec, k.to_integer()).scale_int(unit)
}

/// A valid instance of `id` with the given eigenvalue valuations.
///
/// Eigenvalues get the distinct units 1, 3, 5 so that equal valuations
/// still give distinct eigenvalues; filtration parameters take a fixed
/// value from their domain.
pub fn witness_instance(
    spec: FieldSpec,
    id: FamilyId,
    h: HodgeType,
    vals: &[Q64],
) -> FamilyInstance {
    let eigen = vals
        .iter()
        .zip([1, 3, 5])
        .map(|(&v, u)| element_with_valuation(spec, v, u))
        .collect();
    let fil = catalog::entry(id)
        .domains
        .iter()
        .map(|d| {
            FieldElement::from_int(
                spec,
                match d {
                    ParamDomain::NotZeroOne => 2,
                    _ => 1,
                },
            )
        })
        .collect();
    FamilyInstance::new(id, eigen, fil, h)
}
