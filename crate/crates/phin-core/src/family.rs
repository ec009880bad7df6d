use std::fmt;

use exact_linalg::{Matrix, Subspace, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use valued_field::{FieldElement, Q64};

use crate::{hodge_invariant, newton_invariant, CoreError, Filtration, HodgeType, Shape};

/// The subspaces `U` with `V ⊆ U ⊆ W` and `dim U = k`, all of them stable
/// under `phi` and `N` and sharing one Newton invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubobjectFamily {
    fixed: Subspace,
    ambient: Subspace,
    dim: usize,
    newton: Q64,
}

const SPOT_CHECKS: usize = 4;

impl SubobjectFamily {
    /// Builds the family and spot-checks it against `(phi, n)`: a few
    /// members drawn with a fixed seed must be stable under both operators
    /// and share one Newton invariant.
    pub fn new(
        fixed: Subspace,
        ambient: Subspace,
        dim: usize,
        phi: &Matrix,
        n: &Matrix,
    ) -> Result<Self, CoreError> {
        if !ambient.contains(&fixed)? {
            return Err(CoreError::Family(format!("{fixed} is not inside {ambient}")));
        }
        if dim < fixed.dim() || dim > ambient.dim() || dim == 0 || dim >= ambient.ambient_dim() {
            return Err(CoreError::Family(format!(
                "dimension {dim} is not a proper dimension between {} and {}",
                fixed.dim(),
                ambient.dim()
            )));
        }
        let mut family = SubobjectFamily { fixed, ambient, dim, newton: Q64::from_integer(0) };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut newton = None;
        for _ in 0..SPOT_CHECKS {
            let u = family.random_member(&mut rng);
            if !u.is_invariant(phi)? || !u.is_invariant(n)? {
                return Err(CoreError::Family(format!("member {u} is not (phi, N)-stable")));
            }
            let t = newton_invariant(&u, phi)?;
            match newton {
                None => newton = Some(t),
                Some(t0) if t0 != t => {
                    return Err(CoreError::Family(format!(
                        "Newton invariant varies across members ({t0} and {t})"
                    )))
                }
                Some(_) => {}
            }
        }
        family.newton = newton.expect("at least one spot check");
        Ok(family)
    }

    pub fn fixed(&self) -> &Subspace {
        &self.fixed
    }

    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn newton(&self) -> Q64 {
        self.newton
    }

    /// A family with a single member.
    pub fn is_isolated(&self) -> bool {
        self.fixed.dim() == self.ambient.dim()
    }

    pub fn contains_member(&self, u: &Subspace) -> Result<bool, CoreError> {
        Ok(u.dim() == self.dim && u.contains(&self.fixed)? && self.ambient.contains(u)?)
    }

    /// A member maximizing the Hodge invariant.
    ///
    /// Starting from `V`, add vectors of `W ∩ L1`, then of `W ∩ L2`, then of
    /// `W`. Each `L1` vector raises both `dim(U ∩ L1)` and `dim(U ∩ L2)`, so
    /// this attains both upper bounds `min(dim(W ∩ L), dim(V ∩ L) + k - dim V)`
    /// at once, and `t_H` is increasing in each.
    pub fn max_member(&self, fil: &Filtration) -> Result<Subspace, CoreError> {
        let pools = [self.ambient.intersect(&fil.l1)?, self.ambient.intersect(&fil.l2)?];
        let mut u = self.fixed.clone();
        for pool in pools.iter().chain(std::iter::once(&self.ambient)) {
            for b in pool.basis() {
                if u.dim() == self.dim {
                    return Ok(u);
                }
                if !u.contains_vector(b) {
                    u = extend(&u, b)?;
                }
            }
        }
        debug_assert_eq!(u.dim(), self.dim);
        Ok(u)
    }

    /// The largest Hodge invariant of a member.
    pub fn max_hodge(&self, fil: &Filtration, h: HodgeType) -> Result<Q64, CoreError> {
        hodge_invariant(&self.max_member(fil)?, fil, h)
    }

    /// A random member biased towards the filtration: new directions are
    /// drawn from `W ∩ L1`, `W ∩ L2` or `W` with equal odds, so that members
    /// meeting the flag in every possible way turn up often.
    pub fn sample_member<R: Rng + ?Sized>(
        &self,
        fil: &Filtration,
        rng: &mut R,
    ) -> Result<Subspace, CoreError> {
        Ok(self.sampler(fil)?.sample(rng))
    }

    /// The sampler behind [`sample_member`](Self::sample_member), with the
    /// intersections computed once for repeated draws.
    pub fn sampler(&self, fil: &Filtration) -> Result<MemberSampler<'_>, CoreError> {
        Ok(MemberSampler {
            family: self,
            pools: [
                self.ambient.intersect(&fil.l1)?,
                self.ambient.intersect(&fil.l2)?,
                self.ambient.clone(),
            ],
        })
    }

    /// A random member with no bias.
    pub fn random_member<R: Rng + ?Sized>(&self, rng: &mut R) -> Subspace {
        let ambient = self.ambient.clone();
        self.grow(rng, |rng| random_combination(&ambient, rng))
    }

    fn grow<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        mut draw: impl FnMut(&mut R) -> Option<Vector>,
    ) -> Subspace {
        let mut u = self.fixed.clone();
        for _ in 0..64 {
            if u.dim() == self.dim {
                return u;
            }
            if let Some(v) = draw(rng) {
                if !u.contains_vector(&v) {
                    u = extend(&u, &v).expect("same ambient space");
                }
            }
        }
        for b in self.ambient.basis() {
            if u.dim() == self.dim {
                break;
            }
            if !u.contains_vector(b) {
                u = extend(&u, b).expect("same ambient space");
            }
        }
        u
    }

    /// The family seen in the basis `q e_1, q e_2, q e_3`.
    pub fn transport(&self, q: &Matrix) -> Result<Self, CoreError> {
        Ok(SubobjectFamily {
            fixed: self.fixed.image(q)?,
            ambient: self.ambient.image(q)?,
            dim: self.dim,
            newton: self.newton,
        })
    }
}

/// Draws members of one family relative to a fixed filtration.
#[derive(Debug, Clone)]
pub struct MemberSampler<'a> {
    family: &'a SubobjectFamily,
    pools: [Subspace; 3],
}

impl MemberSampler<'_> {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Subspace {
        self.family.grow(rng, |rng| {
            let pool = &self.pools[rng.random_range(0..self.pools.len())];
            random_combination(pool, rng)
        })
    }
}

impl fmt::Display for SubobjectFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_isolated() {
            write!(f, "{}", self.fixed)
        } else {
            write!(f, "{{U : {} ⊆ U ⊆ {}, dim U = {}}}", self.fixed, self.ambient, self.dim)
        }
    }
}

fn extend(u: &Subspace, v: &[FieldElement]) -> Result<Subspace, CoreError> {
    let mut vs = u.basis().to_vec();
    vs.push(v.to_vec());
    Ok(Subspace::span(u.spec(), u.ambient_dim(), &vs)?)
}

fn random_combination<R: Rng + ?Sized>(pool: &Subspace, rng: &mut R) -> Option<Vector> {
    if pool.dim() == 0 {
        return None;
    }
    let spec = pool.spec();
    let mut v = vec![FieldElement::zero(spec); pool.ambient_dim()];
    for b in pool.basis() {
        let c = FieldElement::from_int(spec, rng.random_range(-3..=3));
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = &*vi + &(&c * bi);
        }
    }
    Some(v)
}

/// The `(fixed, ambient, dim)` coordinate data of the stable-subspace
/// families of a standard shape, with coordinates counted from 0.
fn family_layout(shape: Shape) -> Result<Vec<(&'static [usize], &'static [usize], usize)>, CoreError> {
    const D: &[usize] = &[0, 1, 2];
    Ok(match shape {
        Shape::Crystalline(1) => vec![(&[], D, 1), (&[], D, 2)],
        Shape::Crystalline(2) => vec![(&[], &[1, 2], 1), (&[1], D, 2)],
        Shape::Crystalline(3) | Shape::RankTwo => vec![(&[2], &[2], 1), (&[1, 2], &[1, 2], 2)],
        Shape::Crystalline(4) => {
            vec![(&[], &[0, 1], 1), (&[2], &[2], 1), (&[0, 1], &[0, 1], 2), (&[2], D, 2)]
        }
        Shape::Crystalline(5) => vec![
            (&[1], &[1], 1),
            (&[2], &[2], 1),
            (&[0, 1], &[0, 1], 2),
            (&[1, 2], &[1, 2], 2),
        ],
        Shape::Crystalline(6) => vec![
            (&[0], &[0], 1),
            (&[1], &[1], 1),
            (&[2], &[2], 1),
            (&[0, 1], &[0, 1], 2),
            (&[0, 2], &[0, 2], 2),
            (&[1, 2], &[1, 2], 2),
        ],
        Shape::RankOne(1) => vec![(&[], &[1, 2], 1), (&[1, 2], &[1, 2], 2), (&[0, 2], &[0, 2], 2)],
        Shape::RankOne(2) => vec![(&[2], &[2], 1), (&[0, 2], &[0, 2], 2), (&[1, 2], &[1, 2], 2)],
        Shape::RankOne(3) => vec![(&[1], &[1], 1), (&[2], &[2], 1), (&[2], D, 2)],
        Shape::RankOne(4) => vec![(&[1], &[1], 1), (&[2], &[2], 1), (&[1, 2], &[1, 2], 2)],
        Shape::RankOne(5) => vec![
            (&[1], &[1], 1),
            (&[2], &[2], 1),
            (&[0, 2], &[0, 2], 2),
            (&[1, 2], &[1, 2], 2),
        ],
        other => return Err(CoreError::Shape(format!("unrecognized shape {other}"))),
    })
}

/// Every proper nonzero `(phi, N)`-stable subspace of a pair in standard
/// shape, grouped into families.
pub fn invariant_families(
    phi: &Matrix,
    n: &Matrix,
    shape: Shape,
) -> Result<Vec<SubobjectFamily>, CoreError> {
    let spec = phi.spec();
    family_layout(shape)?
        .into_iter()
        .map(|(v, w, k)| {
            SubobjectFamily::new(
                Subspace::coordinate(spec, 3, v),
                Subspace::coordinate(spec, 3, w),
                k,
                phi,
                n,
            )
        })
        .collect()
}
