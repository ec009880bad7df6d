use std::fmt;
use std::str::FromStr;

use exact_linalg::Matrix;
use valued_field::{FieldElement, FieldSpec};

use crate::CoreError;

/// The twelve normal forms of a Frobenius/monodromy pair.
///
/// Crystalline (`N = 0`) shapes are the Jordan types of `phi`:
///
/// | shape | `phi` |
/// |---|---|
/// | `Crystalline(1)` | `λ·1` |
/// | `Crystalline(2)` | a `2x2` block and a `1x1` block, both `λ` |
/// | `Crystalline(3)` | a single `3x3` block |
/// | `Crystalline(4)` | `diag(λ, λ, λ3)` |
/// | `Crystalline(5)` | a `2x2` block for `λ` and `λ3` |
/// | `Crystalline(6)` | `diag(λ1, λ2, λ3)`, distinct |
///
/// With `N e1 = e3` the five rank-one shapes are `diag(pλ, λ, λ)`, the same
/// with a block on `(e2, e3)`, `diag(pλ, pλ, λ)`, the same with a block on
/// `(e1, e2)`, and `diag(pλ, λ2, λ)` with `λ2 ∉ {λ, pλ}`. With the chain
/// `e1 -> e2 -> e3` the only shape is `diag(p²λ, pλ, λ)`.
///
/// Jordan blocks are lower triangular: the block on `(e_i, e_j)` sends
/// `e_i` to `λ e_i + e_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Crystalline(u8),
    RankOne(u8),
    RankTwo,
}

impl Shape {
    pub const ALL: [Shape; 12] = [
        Shape::Crystalline(1),
        Shape::Crystalline(2),
        Shape::Crystalline(3),
        Shape::Crystalline(4),
        Shape::Crystalline(5),
        Shape::Crystalline(6),
        Shape::RankOne(1),
        Shape::RankOne(2),
        Shape::RankOne(3),
        Shape::RankOne(4),
        Shape::RankOne(5),
        Shape::RankTwo,
    ];

    pub fn n_rank(self) -> usize {
        match self {
            Shape::Crystalline(_) => 0,
            Shape::RankOne(_) => 1,
            Shape::RankTwo => 2,
        }
    }

    /// How many eigenvalue parameters the shape takes.
    pub fn eigen_arity(self) -> usize {
        match self {
            Shape::Crystalline(1..=3) => 1,
            Shape::Crystalline(4 | 5) => 2,
            Shape::Crystalline(_) => 3,
            Shape::RankOne(5) => 2,
            Shape::RankOne(_) | Shape::RankTwo => 1,
        }
    }

    fn is_known(self) -> bool {
        match self {
            Shape::Crystalline(k) => (1..=6).contains(&k),
            Shape::RankOne(k) => (1..=5).contains(&k),
            Shape::RankTwo => true,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Crystalline(k) => write!(f, "cris-{k}"),
            Shape::RankOne(k) => write!(f, "rank1-{k}"),
            Shape::RankTwo => write!(f, "rank2"),
        }
    }
}

impl FromStr for Shape {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoreError::Shape(format!("unrecognized shape {s:?}"));
        let shape = if s == "rank2" {
            Shape::RankTwo
        } else if let Some(k) = s.strip_prefix("cris-") {
            Shape::Crystalline(k.parse().map_err(|_| bad())?)
        } else if let Some(k) = s.strip_prefix("rank1-") {
            Shape::RankOne(k.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        if shape.is_known() {
            Ok(shape)
        } else {
            Err(bad())
        }
    }
}

/// The standard monodromy matrix of rank 0, 1 or 2.
pub fn standard_n(spec: FieldSpec, rank: usize) -> Result<Matrix, CoreError> {
    let mut n = Matrix::zeros(spec, 3, 3);
    let one = FieldElement::one(spec);
    match rank {
        0 => {}
        1 => n.set(2, 0, one),
        2 => {
            n.set(1, 0, one.clone());
            n.set(2, 1, one);
        }
        _ => return Err(CoreError::Shape(format!("N of rank {rank} is not nilpotent in dimension 3"))),
    }
    Ok(n)
}

/// The standard Frobenius matrix of `shape` with the given eigenvalue
/// parameters (`λ`, `(λ, λ3)`, `(λ1, λ2, λ3)` or `(λ, λ2)` for rank-one
/// shape 5).
///
/// Fails when the parameters would put the matrix in a different shape:
/// a zero eigenvalue, `λ = λ3` in crystalline shapes 4 and 5, repeated
/// eigenvalues in shape 6, or `λ2 ∈ {λ, pλ}` in rank-one shape 5.
pub fn standard_phi(shape: Shape, eigen: &[FieldElement]) -> Result<Matrix, CoreError> {
    if !shape.is_known() {
        return Err(CoreError::Shape(format!("unrecognized shape {shape}")));
    }
    if eigen.len() != shape.eigen_arity() {
        return Err(CoreError::Shape(format!(
            "shape {shape} takes {} eigenvalue(s), got {}",
            shape.eigen_arity(),
            eigen.len()
        )));
    }
    let spec = eigen[0].spec();
    if eigen.iter().any(|x| x.spec() != spec) {
        return Err(CoreError::Shape("eigenvalues over different fields".into()));
    }
    if eigen.iter().any(FieldElement::is_zero) {
        return Err(CoreError::Shape("eigenvalues must be nonzero".into()));
    }
    let p = FieldElement::from_int(spec, i64::from(spec.prime()));
    let l = &eigen[0];
    let pl = &p * l;
    let one = FieldElement::one(spec);
    let distinct = |a: &FieldElement, b: &FieldElement, what: &str| {
        if a == b {
            Err(CoreError::Shape(format!("shape {shape} requires {what}")))
        } else {
            Ok(())
        }
    };
    let mut phi = match shape {
        Shape::Crystalline(1..=3) => Matrix::diag(&[l.clone(), l.clone(), l.clone()]),
        Shape::Crystalline(4 | 5) => {
            distinct(l, &eigen[1], "λ != λ3")?;
            Matrix::diag(&[l.clone(), l.clone(), eigen[1].clone()])
        }
        Shape::Crystalline(_) => {
            distinct(&eigen[0], &eigen[1], "distinct eigenvalues")?;
            distinct(&eigen[0], &eigen[2], "distinct eigenvalues")?;
            distinct(&eigen[1], &eigen[2], "distinct eigenvalues")?;
            Matrix::diag(eigen)
        }
        Shape::RankOne(1 | 2) => Matrix::diag(&[pl.clone(), l.clone(), l.clone()]),
        Shape::RankOne(3 | 4) => Matrix::diag(&[pl.clone(), pl.clone(), l.clone()]),
        Shape::RankOne(_) => {
            distinct(&eigen[1], l, "λ2 != λ")?;
            distinct(&eigen[1], &pl, "λ2 != pλ")?;
            Matrix::diag(&[pl.clone(), eigen[1].clone(), l.clone()])
        }
        Shape::RankTwo => Matrix::diag(&[&p * &pl, pl.clone(), l.clone()]),
    };
    match shape {
        Shape::Crystalline(2 | 5) | Shape::RankOne(4) => phi.set(1, 0, one),
        Shape::Crystalline(3) => {
            phi.set(1, 0, one.clone());
            phi.set(2, 1, one);
        }
        Shape::RankOne(2) => phi.set(2, 1, one),
        _ => {}
    }
    Ok(phi)
}
