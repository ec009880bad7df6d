//! The 49 family patterns as data.
//!
//! A filtration pattern is written coordinate-wise in a small notation:
//! `0` and `1` are constants, `a`, `b`, `c` are the affine parameters
//! `fil_params[0..3]`, and `A`, `B` are the two homogeneous coordinates of
//! a projective parameter `[fil_params[0] : fil_params[1]]`. So `"1 0 a"`
//! stands for `e1 + 𝔏 e3`.

use phin_core::{HodgeType, Q64};

use crate::FamilyId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coord {
    Zero,
    One,
    Param(usize),
    Proj(usize),
}

pub type Pattern = [Coord; 3];

/// Where a filtration parameter may range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamDomain {
    Any,
    NonZero,
    /// Outside `{0, 1}`.
    NotZeroOne,
    /// One homogeneous coordinate of a projective point; the pair is
    /// normalized so that its first nonzero entry is 1.
    Projective,
}

/// One family's filtration pattern and parameter domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: FamilyId,
    pub fil_s: Pattern,
    pub fil_r: [Pattern; 2],
    pub domains: Vec<ParamDomain>,
}

/// A named valuation condition.
#[derive(Clone, Copy)]
pub struct Condition {
    pub text: &'static str,
    check: fn(&Vals) -> bool,
}

impl Condition {
    pub fn holds(&self, vals: &Vals) -> bool {
        (self.check)(vals)
    }
}

impl std::fmt::Debug for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.text)
    }
}

/// The data the valuation conditions are stated in: the Hodge type and
/// the valuations of the eigenvalue parameters, padded with zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vals {
    pub r: Q64,
    pub s: Q64,
    pub v: [Q64; 3],
}

impl Vals {
    pub fn new(h: HodgeType, v: &[Q64]) -> Self {
        let mut padded = [Q64::from_integer(0); 3];
        padded[..v.len()].copy_from_slice(v);
        Vals {
            r: Q64::from_integer(h.r),
            s: Q64::from_integer(h.s),
            v: padded,
        }
    }
}

fn q(n: i64) -> Q64 {
    Q64::from_integer(n)
}

macro_rules! conds {
    ($($text:literal => |$x:ident| $body:expr),* $(,)?) => {
        vec![$(Condition { text: $text, check: |$x: &Vals| $body }),*]
    };
}

fn parse_pattern(text: &str) -> Pattern {
    let coords: Vec<Coord> = text
        .split_whitespace()
        .map(|t| match t {
            "0" => Coord::Zero,
            "1" => Coord::One,
            "a" => Coord::Param(0),
            "b" => Coord::Param(1),
            "c" => Coord::Param(2),
            "A" => Coord::Proj(0),
            "B" => Coord::Proj(1),
            other => panic!("bad pattern token {other:?}"),
        })
        .collect();
    coords.try_into().expect("patterns have three coordinates")
}

/// The catalog entry for `id`.
pub fn entry(id: FamilyId) -> CatalogEntry {
    use ParamDomain::*;
    let (l1, l2, domains): (&str, [&str; 2], &[ParamDomain]) = match id {
        FamilyId::Cris(1) | FamilyId::Cris(2) => ("1 0 0", ["1 0 0", "0 0 1"], &[]),
        FamilyId::Cris(3) => ("0 1 0", ["0 1 0", "1 0 0"], &[]),
        FamilyId::Cris(4) => ("1 0 0", ["1 0 0", "0 1 a"], &[Any]),
        FamilyId::Cris(5) => ("1 0 1", ["1 0 1", "0 1 0"], &[]),
        FamilyId::Cris(6) => ("0 0 1", ["0 0 1", "1 0 0"], &[]),
        FamilyId::Cris(7) => ("1 0 0", ["1 0 0", "0 1 0"], &[]),
        FamilyId::Cris(8) => ("1 0 0", ["1 0 0", "0 0 1"], &[]),
        FamilyId::Cris(9) => ("1 0 0", ["1 0 0", "0 1 1"], &[]),
        FamilyId::Cris(10) => ("0 1 1", ["0 1 1", "1 0 0"], &[]),
        FamilyId::Cris(11) => ("1 0 1", ["1 0 1", "0 1 0"], &[]),
        FamilyId::Cris(12) => ("1 0 1", ["1 0 0", "0 0 1"], &[]),
        FamilyId::Cris(13) => ("1 0 1", ["1 0 1", "0 1 a"], &[NonZero]),
        FamilyId::Cris(14) => ("1 0 0", ["1 0 0", "0 1 0"], &[]),
        FamilyId::Cris(15) => ("1 0 0", ["1 0 0", "0 1 1"], &[]),
        FamilyId::Cris(16) => ("1 1 0", ["1 0 0", "0 1 0"], &[]),
        FamilyId::Cris(17) => ("1 1 0", ["1 1 0", "0 0 1"], &[]),
        FamilyId::Cris(18) => ("1 1 0", ["1 1 0", "0 1 1"], &[]),
        FamilyId::Cris(19) => ("0 1 1", ["0 1 1", "1 0 0"], &[]),
        FamilyId::Cris(20) => ("0 1 1", ["0 1 1", "1 0 1"], &[]),
        FamilyId::Cris(21) => ("1 0 1", ["1 0 1", "0 1 0"], &[]),
        FamilyId::Cris(22) => ("1 0 1", ["1 0 1", "0 1 1"], &[]),
        FamilyId::Cris(23) => ("1 1 1", ["1 1 1", "1 0 0"], &[]),
        FamilyId::Cris(24) => ("1 1 1", ["1 1 1", "0 1 0"], &[]),
        FamilyId::Cris(25) => ("1 1 1", ["1 1 1", "0 0 1"], &[]),
        FamilyId::Cris(26) => ("1 1 1", ["1 1 1", "0 1 a"], &[NotZeroOne]),
        FamilyId::RankOne(1) => ("1 0 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(2) => ("1 1 0", ["1 1 0", "0 A B"], &[Projective, Projective]),
        FamilyId::RankOne(3) => ("0 1 0", ["0 1 0", "1 0 a"], &[Any]),
        FamilyId::RankOne(4) => ("1 0 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(5) => ("1 a 0", ["1 a 0", "0 0 1"], &[NonZero]),
        FamilyId::RankOne(6) => ("1 a 0", ["1 a 0", "0 1 b"], &[NonZero, Any]),
        FamilyId::RankOne(7) => ("1 0 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(8) => ("A B B", ["1 0 0", "0 1 1"], &[Projective, Projective]),
        FamilyId::RankOne(9) => ("0 1 a", ["0 1 a", "1 0 0"], &[NonZero]),
        FamilyId::RankOne(10) => ("1 0 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(11) => ("1 0 a", ["1 0 0", "0 0 1"], &[Any]),
        FamilyId::RankOne(12) => ("1 0 a", ["1 0 a", "0 1 b"], &[Any, NonZero]),
        FamilyId::RankOne(13) => ("0 1 0", ["0 1 0", "1 0 a"], &[Any]),
        FamilyId::RankOne(14) => ("1 0 a", ["1 0 0", "0 0 1"], &[Any]),
        FamilyId::RankOne(15) => ("0 1 1", ["0 1 1", "1 0 a"], &[Any]),
        FamilyId::RankOne(16) => ("1 0 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(17) => ("1 0 a", ["1 0 a", "0 1 1"], &[Any]),
        FamilyId::RankOne(18) => ("1 1 a", ["1 0 a", "0 1 0"], &[Any]),
        FamilyId::RankOne(19) => ("1 1 a", ["1 1 0", "0 0 1"], &[Any]),
        FamilyId::RankOne(20) => ("1 1 a", ["1 1 a", "0 1 b"], &[Any, NonZero]),
        FamilyId::RankTwo(1) => ("0 1 a", ["0 1 a", "1 0 b"], &[Any, Any]),
        FamilyId::RankTwo(2) => ("1 a b", ["1 a b", "0 0 1"], &[Any, Any]),
        FamilyId::RankTwo(3) => ("1 a b", ["1 a b", "0 1 c"], &[Any, Any, Any]),
        other => unreachable!("no family {other}"),
    };
    CatalogEntry {
        id,
        fil_s: parse_pattern(l1),
        fil_r: [parse_pattern(l2[0]), parse_pattern(l2[1])],
        domains: domains.to_vec(),
    }
}

/// The valuation conditions of `id`, in terms of `v[0..]` = the valuations
/// of the eigenvalue parameters in order.
pub fn conditions(id: FamilyId) -> Vec<Condition> {
    match id {
        FamilyId::Cris(1) => conds! {
            "v(λ) = (r+s)/3" => |x| x.v[0] * 3 == x.r + x.s,
            "s = 2r" => |x| x.s == x.r * 2,
        },
        FamilyId::Cris(2) => conds! {
            "v(λ) = (r+s)/3" => |x| x.v[0] * 3 == x.r + x.s,
            "s ≥ 2r" => |x| x.s >= x.r * 2,
        },
        FamilyId::Cris(3) => conds! {
            "v(λ) = (r+s)/3" => |x| x.v[0] * 3 == x.r + x.s,
            "s ≤ 2r" => |x| x.s <= x.r * 2,
        },
        FamilyId::Cris(4) => conds! {
            "v(λ) = (r+s)/3" => |x| x.v[0] * 3 == x.r + x.s,
        },
        FamilyId::Cris(5) => conds! {
            "v(λ) = r" => |x| x.v[0] == x.r,
            "v(λ3) = s-r" => |x| x.v[1] == x.s - x.r,
        },
        FamilyId::Cris(6) => conds! {
            "v(λ) = r/2" => |x| x.v[0] * 2 == x.r,
            "v(λ3) = s" => |x| x.v[1] == x.s,
        },
        FamilyId::Cris(7) => conds! {
            "v(λ) = (r+s)/2" => |x| x.v[0] * 2 == x.r + x.s,
            "v(λ3) = 0" => |x| x.v[1] == q(0),
        },
        FamilyId::Cris(8) => conds! {
            "v(λ) = s/2" => |x| x.v[0] * 2 == x.s,
            "v(λ3) = r" => |x| x.v[1] == x.r,
        },
        FamilyId::Cris(9) => conds! {
            "s/2 ≤ v(λ) ≤ (r+s)/2" => |x| x.s <= x.v[0] * 2 && x.v[0] * 2 <= x.r + x.s,
            "2v(λ) + v(λ3) = r+s" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(10) => conds! {
            "r/2 ≤ v(λ) ≤ r" => |x| x.r <= x.v[0] * 2 && x.v[0] <= x.r,
            "2v(λ) + v(λ3) = r+s" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(11) => conds! {
            "r ≤ v(λ) ≤ (r+s)/2" => |x| x.r <= x.v[0] && x.v[0] * 2 <= x.r + x.s,
            "2v(λ) + v(λ3) = r+s" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(12) => conds! {
            "r/2 ≤ v(λ) ≤ s/2" => |x| x.r <= x.v[0] * 2 && x.v[0] * 2 <= x.s,
            "2v(λ) + v(λ3) = r+s" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(13) => conds! {
            "r/2 ≤ v(λ) ≤ (r+s)/2" => |x| x.r <= x.v[0] * 2 && x.v[0] * 2 <= x.r + x.s,
            "2v(λ) + v(λ3) = r+s" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(14) => conds! {
            "v(λ1) = s" => |x| x.v[0] == x.s,
            "v(λ2) = r" => |x| x.v[1] == x.r,
            "v(λ3) = 0" => |x| x.v[2] == q(0),
        },
        FamilyId::Cris(15) => conds! {
            "s = v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ 0" => |x| x.s == x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= q(0),
            "v(λ2) + v(λ3) = r" => |x| x.v[1] + x.v[2] == x.r,
        },
        FamilyId::Cris(16) => conds! {
            "v(λ1) ≥ v(λ2) ≥ r" => |x| x.v[0] >= x.v[1] && x.v[1] >= x.r,
            "v(λ3) = 0" => |x| x.v[2] == q(0),
            "v(λ1) + v(λ2) = r+s" => |x| x.v[0] + x.v[1] == x.r + x.s,
        },
        FamilyId::Cris(17) => conds! {
            "v(λ1) ≥ v(λ2) ≥ v(λ3) = r" => |x| x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] == x.r,
            "v(λ1) + v(λ2) = s" => |x| x.v[0] + x.v[1] == x.s,
            "s ≥ 2r" => |x| x.s >= x.r * 2,
        },
        FamilyId::Cris(18) => conds! {
            "s ≥ v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ 0" => |x| x.s >= x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= q(0),
            "v(λ3) ≤ r" => |x| x.v[2] <= x.r,
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
        },
        FamilyId::Cris(19) => conds! {
            "r = v(λ1) ≥ v(λ2) ≥ v(λ3)" => |x| x.r == x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2],
            "v(λ2) + v(λ3) = s" => |x| x.v[1] + x.v[2] == x.s,
            "s ≤ 2r" => |x| x.s <= x.r * 2,
        },
        FamilyId::Cris(20) => conds! {
            "r ≥ v(λ1) ≥ v(λ2) ≥ v(λ3)" => |x| x.r >= x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2],
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
            "s ≤ 2r" => |x| x.s <= x.r * 2,
        },
        FamilyId::Cris(21) => conds! {
            "v(λ1) ≥ v(λ2) = r ≥ v(λ3) ≥ 0" => |x| x.v[0] >= x.v[1] && x.v[1] == x.r && x.r >= x.v[2] && x.v[2] >= q(0),
            "v(λ1) + v(λ3) = s" => |x| x.v[0] + x.v[2] == x.s,
        },
        FamilyId::Cris(22) => conds! {
            "s ≥ v(λ1) ≥ v(λ2) ≥ v(λ3)" => |x| x.s >= x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2],
            "v(λ2) ≤ r" => |x| x.v[1] <= x.r,
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
        },
        FamilyId::Cris(23) => conds! {
            "v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ 0" => |x| x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= q(0),
            "r ≤ v(λ1) ≤ s" => |x| x.r <= x.v[0] && x.v[0] <= x.s,
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
        },
        FamilyId::Cris(24) => conds! {
            "v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ 0" => |x| x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= q(0),
            "v(λ2) ≥ r" => |x| x.v[1] >= x.r,
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
        },
        FamilyId::Cris(25) => conds! {
            "v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ r" => |x| x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= x.r,
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
            "s ≥ 2r" => |x| x.s >= x.r * 2,
        },
        FamilyId::Cris(26) => conds! {
            "s ≥ v(λ1) ≥ v(λ2) ≥ v(λ3) ≥ 0" => |x| x.s >= x.v[0] && x.v[0] >= x.v[1] && x.v[1] >= x.v[2] && x.v[2] >= q(0),
            "v(λ1) + v(λ2) + v(λ3) = r+s" => |x| x.v[0] + x.v[1] + x.v[2] == x.r + x.s,
        },
        FamilyId::RankOne(1) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
            "s = 2r+1" => |x| x.s == x.r * 2 + 1,
        },
        FamilyId::RankOne(2) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
            "s ≥ 2r+1" => |x| x.s >= x.r * 2 + 1,
        },
        FamilyId::RankOne(3) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
            "s ≤ 2r-2" => |x| x.s <= x.r * 2 - 2,
        },
        FamilyId::RankOne(4) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
            "s ≤ 2r+1" => |x| x.s <= x.r * 2 + 1,
        },
        FamilyId::RankOne(5) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
            "s ≥ 2r+1" => |x| x.s >= x.r * 2 + 1,
        },
        FamilyId::RankOne(6) => conds! {
            "v(λ) = (r+s-1)/3" => |x| x.v[0] * 3 == x.r + x.s - 1,
        },
        FamilyId::RankOne(7) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
            "s = 2r-1" => |x| x.s == x.r * 2 - 1,
        },
        FamilyId::RankOne(8) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
            "s ≤ 2r-1" => |x| x.s <= x.r * 2 - 1,
        },
        FamilyId::RankOne(9) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
            "s ≤ 2r-1" => |x| x.s <= x.r * 2 - 1,
        },
        FamilyId::RankOne(10) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
            "s ≥ 2r-1" => |x| x.s >= x.r * 2 - 1,
        },
        FamilyId::RankOne(11) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
            "s ≥ 2r+2" => |x| x.s >= x.r * 2 + 2,
        },
        FamilyId::RankOne(12) => conds! {
            "v(λ) = (r+s-2)/3" => |x| x.v[0] * 3 == x.r + x.s - 2,
        },
        FamilyId::RankOne(13) => conds! {
            "v(λ) = (r-1)/2" => |x| x.v[0] * 2 == x.r - 1,
            "v(λ2) = s" => |x| x.v[1] == x.s,
        },
        FamilyId::RankOne(14) => conds! {
            "v(λ) = (r+s-1)/2" => |x| x.v[0] * 2 == x.r + x.s - 1,
            "v(λ2) = 0" => |x| x.v[1] == q(0),
        },
        FamilyId::RankOne(15) => conds! {
            "(r-1)/2 ≤ v(λ) ≤ r-1" => |x| x.r - 1 <= x.v[0] * 2 && x.v[0] <= x.r - 1,
            "2v(λ) + v(λ2) = r+s-1" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s - 1,
        },
        FamilyId::RankOne(16) => conds! {
            "v(λ) = (s-1)/2" => |x| x.v[0] * 2 == x.s - 1,
            "v(λ2) = r" => |x| x.v[1] == x.r,
        },
        FamilyId::RankOne(17) => conds! {
            "(s-1)/2 ≤ v(λ) ≤ (r+s-1)/2" => |x| x.s - 1 <= x.v[0] * 2 && x.v[0] * 2 <= x.r + x.s - 1,
            "2v(λ) + v(λ2) = r+s-1" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s - 1,
        },
        FamilyId::RankOne(18) => conds! {
            "(r-1)/2 ≤ v(λ) ≤ (s-1)/2" => |x| x.r - 1 <= x.v[0] * 2 && x.v[0] * 2 <= x.s - 1,
            "2v(λ) + v(λ2) = r+s-1" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s - 1,
        },
        FamilyId::RankOne(19) => conds! {
            "r ≤ v(λ) ≤ (r+s-1)/2" => |x| x.r <= x.v[0] && x.v[0] * 2 <= x.r + x.s - 1,
            "2v(λ) + v(λ2) = r+s-1" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s - 1,
            "s ≥ r+1" => |x| x.s >= x.r + 1,
        },
        FamilyId::RankOne(20) => conds! {
            "(r-1)/2 ≤ v(λ) ≤ (r+s-1)/2" => |x| x.r - 1 <= x.v[0] * 2 && x.v[0] * 2 <= x.r + x.s - 1,
            "2v(λ) + v(λ2) = r+s-1" => |x| x.v[0] * 2 + x.v[1] == x.r + x.s - 1,
        },
        FamilyId::RankTwo(1) => conds! {
            "v(λ) = (r+s-3)/3" => |x| x.v[0] * 3 == x.r + x.s - 3,
            "s ≤ 2r-3" => |x| x.s <= x.r * 2 - 3,
        },
        FamilyId::RankTwo(2) => conds! {
            "v(λ) = (r+s-3)/3" => |x| x.v[0] * 3 == x.r + x.s - 3,
            "s ≥ 2r+3" => |x| x.s >= x.r * 2 + 3,
        },
        FamilyId::RankTwo(3) => conds! {
            "v(λ) = (r+s-3)/3" => |x| x.v[0] * 3 == x.r + x.s - 3,
        },
        other => unreachable!("no family {other}"),
    }
}

/// The conditions of `id` that fail for `vals`.
pub fn failed_conditions(id: FamilyId, vals: &Vals) -> Vec<&'static str> {
    conditions(id)
        .into_iter()
        .filter(|c| !c.holds(vals))
        .map(|c| c.text)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_has_an_entry_and_conditions() {
        for id in FamilyId::all() {
            let e = entry(id);
            let params = e
                .fil_s
                .iter()
                .chain(e.fil_r.iter().flatten())
                .filter_map(|c| match c {
                    Coord::Param(i) | Coord::Proj(i) => Some(i + 1),
                    _ => None,
                })
                .max()
                .unwrap_or(0);
            assert_eq!(params, e.domains.len(), "{id}");
            assert!(!conditions(id).is_empty());
        }
    }

    #[test]
    fn cris_one_conditions() {
        let h = HodgeType::new(1, 2);
        assert!(failed_conditions(FamilyId::Cris(1), &Vals::new(h, &[q(1)])).is_empty());
        assert_eq!(
            failed_conditions(
                FamilyId::Cris(1),
                &Vals::new(HodgeType::new(1, 3), &[Q64::new(4, 3)])
            ),
            vec!["s = 2r"]
        );
    }
}
