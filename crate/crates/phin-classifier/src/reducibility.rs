use std::fmt;

use exact_linalg::Subspace;
use phin_core::{FieldElement, Q64};
use serde::{Deserialize, Serialize};

use crate::{ClassifyError, FamilyId, FamilyInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReducibilityKind {
    Decomposable,
    NonSplitReducible,
    Irreducible,
}

impl fmt::Display for ReducibilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReducibilityKind::Decomposable => "decomposable",
            ReducibilityKind::NonSplitReducible => "non-split reducible",
            ReducibilityKind::Irreducible => "irreducible",
        })
    }
}

/// The reducibility of a family instance and the submodules its
/// classification statement lists, in the listed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub kind: ReducibilityKind,
    pub submodules: Vec<Subspace>,
}

/// Reads the kind and submodule list off the family's rule.
///
/// Submodules are in the representative's basis, i.e. subspaces of
/// `instantiate(fi)`.
pub fn reducibility(fi: &FamilyInstance) -> Result<ReducibilityReport, ClassifyError> {
    let violations = fi.violations();
    if !violations.is_empty() {
        return Err(ClassifyError::Constraint {
            id: fi.id.to_string(),
            violations,
        });
    }
    let spec = fi.spec();
    let x = fi.vals();
    let (r, s, v) = (x.r, x.s, x.v);
    let half = |q: Q64| q / 2;
    let coord = |idx: &[usize]| Subspace::coordinate(spec, 3, idx);
    let (e1, e2, e3) = (&coord(&[0]), &coord(&[1]), &coord(&[2]));
    let (e12, e13, e23) = (&coord(&[0, 1]), &coord(&[0, 2]), &coord(&[1, 2]));

    use ReducibilityKind::*;
    let owned = |subs: Vec<&Subspace>| subs.into_iter().cloned().collect::<Vec<_>>();
    let dec = |subs: Vec<&Subspace>| (Decomposable, owned(subs));
    let irr = || (Irreducible, Vec::new());
    // Picks the first branch whose condition holds, else irreducible.
    let pick = |branches: Vec<(bool, Vec<&Subspace>)>| {
        branches
            .into_iter()
            .find(|(c, _)| *c)
            .map_or_else(irr, |(_, subs)| (NonSplitReducible, owned(subs)))
    };
    let one = Q64::from_integer(1);
    let zero = Q64::from_integer(0);

    let (kind, submodules) = match fi.id {
        FamilyId::Cris(1) => dec(vec![e12, e3]),
        FamilyId::Cris(2) => pick(vec![(s == r * 2, vec![e3])]),
        FamilyId::Cris(3) => pick(vec![(s == r * 2, vec![e23])]),
        FamilyId::Cris(4) => irr(),
        FamilyId::Cris(5) => dec(vec![e2, e13]),
        FamilyId::Cris(6..=8) => dec(vec![e3, e12]),
        FamilyId::Cris(9) => pick(vec![
            (v[0] == half(s), vec![e12]),
            (v[0] == half(r + s), vec![e3]),
        ]),
        FamilyId::Cris(10) => pick(vec![(v[0] == half(r), vec![e12]), (v[0] == r, vec![e23])]),
        FamilyId::Cris(11) => pick(vec![(v[0] == r, vec![e2]), (v[0] == half(r + s), vec![e3])]),
        FamilyId::Cris(12) => pick(vec![
            (v[0] == half(r), vec![e12]),
            (v[0] == half(s), vec![e3]),
        ]),
        FamilyId::Cris(13) => pick(vec![
            (v[0] == half(r), vec![e12]),
            (v[0] == half(r + s), vec![e3]),
        ]),
        FamilyId::Cris(14) => dec(vec![e1, e2, e3, e12, e13, e23]),
        FamilyId::Cris(15) => {
            let mut subs = vec![e1, e23];
            if v[2] == zero {
                subs.extend([e3, e13]);
            }
            dec(subs)
        }
        FamilyId::Cris(16) => {
            let mut subs = vec![e3, e12];
            if v[1] == r {
                subs.extend([e2, e23]);
            }
            dec(subs)
        }
        FamilyId::Cris(17) => dec(vec![e3, e12]),
        FamilyId::Cris(18) => pick(vec![
            (v[2] == zero, vec![e3]),
            (v[2] == r, vec![e12]),
            (v[0] == s, vec![e23]),
        ]),
        FamilyId::Cris(19) => dec(vec![e1, e23]),
        FamilyId::Cris(20) => pick(vec![(v[0] == r, vec![e23])]),
        FamilyId::Cris(21) => {
            let mut subs = vec![e2, e13];
            if v[0] == s {
                subs.extend([e3, e23]);
            }
            dec(subs)
        }
        FamilyId::Cris(22) => pick(vec![
            (v[2] == zero, vec![e3]),
            (v[1] == r, vec![e13]),
            (v[0] == s, vec![e23]),
        ]),
        FamilyId::Cris(23) => pick(vec![
            (v[2] == zero, vec![e3]),
            (v[0] == r, vec![e1]),
            (v[0] == s, vec![e23]),
        ]),
        FamilyId::Cris(24) => pick(vec![
            (v[2] == zero, vec![e3]),
            (v[1] == r, vec![e2]),
            (v[0] == s, vec![e23]),
        ]),
        FamilyId::Cris(25) => pick(vec![(v[2] == r, vec![e3])]),
        FamilyId::Cris(26) => pick(vec![(v[2] == zero, vec![e3]), (v[0] == s, vec![e23])]),

        FamilyId::RankOne(1 | 7 | 16) => dec(vec![e2, e13]),
        FamilyId::RankOne(2) => {
            let w: Vec<FieldElement> = vec![
                FieldElement::zero(spec),
                fi.fil_params[0].clone(),
                fi.fil_params[1].clone(),
            ];
            let sub = Subspace::span(spec, 3, &[w])?;
            pick(vec![(s == r * 2 + 1, vec![&sub])])
        }
        FamilyId::RankOne(3) => pick(vec![(s == r * 2 - 2, vec![e23])]),
        FamilyId::RankOne(4) => pick(vec![(s == r * 2 + 1, vec![e13])]),
        FamilyId::RankOne(5) => pick(vec![(s == r * 2 + 1, vec![e3])]),
        FamilyId::RankOne(6) => irr(),
        FamilyId::RankOne(8) => {
            let w: Vec<FieldElement> = vec![
                fi.fil_params[0].clone(),
                fi.fil_params[1].clone(),
                FieldElement::zero(spec),
            ];
            let sub = Subspace::span(spec, 3, &[w, exact_linalg::unit_vector(spec, 3, 2)])?;
            pick(vec![(s == r * 2 - 1, vec![&sub])])
        }
        FamilyId::RankOne(9) => pick(vec![(s == r * 2 - 1, vec![e23])]),
        FamilyId::RankOne(10) => pick(vec![(s == r * 2 - 1, vec![e2])]),
        FamilyId::RankOne(11) => pick(vec![(s == r * 2 + 2, vec![e3])]),
        FamilyId::RankOne(12) => irr(),
        FamilyId::RankOne(13) => {
            let mut subs = vec![e2, e13];
            if r == one {
                subs.extend([e3, e23]);
            }
            dec(subs)
        }
        FamilyId::RankOne(14) => {
            let mut subs = vec![e2, e13];
            if s == r + 1 {
                subs.extend([e3, e23]);
            }
            dec(subs)
        }
        FamilyId::RankOne(15) => pick(vec![
            (r == one, vec![e3, e23, e13]),
            (v[0] == half(r - 1), vec![e13]),
            (v[0] == r - 1, vec![e23]),
        ]),
        FamilyId::RankOne(17) => pick(vec![
            (v[0] == half(s - 1), vec![e13]),
            (v[0] == half(r + s - 1) && s == r + 1, vec![e2, e23]),
            (v[0] == half(r + s - 1), vec![e2]),
        ]),
        FamilyId::RankOne(18) => pick(vec![
            (v[0] == half(r - 1) && r == one, vec![e3, e13]),
            (v[0] == half(r - 1), vec![e13]),
            (v[0] == half(s - 1), vec![e2]),
        ]),
        FamilyId::RankOne(19) => pick(vec![
            (s == r + 1, vec![e2, e3, e23]),
            (v[0] == r, vec![e3]),
            (v[0] == half(r + s - 1), vec![e2]),
        ]),
        FamilyId::RankOne(20) => pick(vec![
            (v[0] == half(r - 1) && r == one, vec![e3, e13]),
            (v[0] == half(r - 1), vec![e13]),
            (v[0] == half(r + s - 1) && s == r + 1, vec![e2, e23]),
            (v[0] == half(r + s - 1), vec![e2]),
        ]),

        FamilyId::RankTwo(1) => pick(vec![(s == r * 2 - 3, vec![e23])]),
        FamilyId::RankTwo(2) => pick(vec![(s == r * 2 + 3, vec![e3])]),
        FamilyId::RankTwo(3) => pick(vec![(s == Q64::from_integer(2), vec![e3, e23])]),
        other => unreachable!("no family {other}"),
    };
    Ok(ReducibilityReport { kind, submodules })
}
