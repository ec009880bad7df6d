use std::fmt;
use std::str::FromStr;

use phin_core::Shape;

use crate::ClassifyError;

/// One of the 49 families: `Cris1`..`Cris26` (`N = 0`), `R1_1`..`R1_20`
/// (`rank N = 1`) and `R2_1`..`R2_3` (`rank N = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Cris(u8),
    RankOne(u8),
    RankTwo(u8),
}

impl FamilyId {
    pub fn new_cris(k: u8) -> Option<Self> {
        (1..=26).contains(&k).then_some(FamilyId::Cris(k))
    }

    pub fn new_rank_one(k: u8) -> Option<Self> {
        (1..=20).contains(&k).then_some(FamilyId::RankOne(k))
    }

    pub fn new_rank_two(k: u8) -> Option<Self> {
        (1..=3).contains(&k).then_some(FamilyId::RankTwo(k))
    }

    /// All 49 identifiers in catalog order.
    pub fn all() -> impl Iterator<Item = FamilyId> {
        (1..=26)
            .map(FamilyId::Cris)
            .chain((1..=20).map(FamilyId::RankOne))
            .chain((1..=3).map(FamilyId::RankTwo))
    }

    pub fn n_rank(self) -> usize {
        match self {
            FamilyId::Cris(_) => 0,
            FamilyId::RankOne(_) => 1,
            FamilyId::RankTwo(_) => 2,
        }
    }

    /// The standard shape of the family's `(phi, N)`.
    pub fn shape(self) -> Shape {
        match self {
            FamilyId::Cris(1) => Shape::Crystalline(2),
            FamilyId::Cris(2..=4) => Shape::Crystalline(3),
            FamilyId::Cris(5) => Shape::Crystalline(4),
            FamilyId::Cris(6..=13) => Shape::Crystalline(5),
            FamilyId::Cris(_) => Shape::Crystalline(6),
            FamilyId::RankOne(1 | 2) => Shape::RankOne(1),
            FamilyId::RankOne(3..=6) => Shape::RankOne(2),
            FamilyId::RankOne(7 | 8) => Shape::RankOne(3),
            FamilyId::RankOne(9..=12) => Shape::RankOne(4),
            FamilyId::RankOne(_) => Shape::RankOne(5),
            FamilyId::RankTwo(_) => Shape::RankTwo,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Cris(k) => write!(f, "Cris{k}"),
            FamilyId::RankOne(k) => write!(f, "R1_{k}"),
            FamilyId::RankTwo(k) => write!(f, "R2_{k}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parsed = if let Some(k) = s.strip_prefix("Cris") {
            k.parse().ok().and_then(FamilyId::new_cris)
        } else if let Some(k) = s.strip_prefix("R1_") {
            k.parse().ok().and_then(FamilyId::new_rank_one)
        } else if let Some(k) = s.strip_prefix("R2_") {
            k.parse().ok().and_then(FamilyId::new_rank_two)
        } else {
            None
        };
        parsed.ok_or_else(|| ClassifyError::UnknownFamily(s.to_string()))
    }
}
