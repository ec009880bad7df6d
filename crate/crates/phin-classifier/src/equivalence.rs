use phin_core::FieldElement;

use crate::{FamilyId, FamilyInstance};

/// A fractional-linear change of the filtration parameter 𝔏.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mobius {
    Identity,
    /// `1 - 1/𝔏`
    OneMinusInverse,
    /// `1/(1 - 𝔏)`
    InverseOfOneMinus,
    /// `1/𝔏`
    Inverse,
    /// `𝔏/(𝔏 - 1)`
    Ratio,
    /// `1 - 𝔏`
    OneMinus,
}

impl Mobius {
    pub fn apply(self, x: &FieldElement) -> Option<FieldElement> {
        let one = FieldElement::one(x.spec());
        let inv = |y: &FieldElement| y.inv().ok();
        match self {
            Mobius::Identity => Some(x.clone()),
            Mobius::OneMinusInverse => Some(&one - &inv(x)?),
            Mobius::InverseOfOneMinus => inv(&(&one - x)),
            Mobius::Inverse => inv(x),
            Mobius::Ratio => Some(x * &inv(&(x - &one))?),
            Mobius::OneMinus => Some(&one - x),
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Mobius::OneMinusInverse => Mobius::InverseOfOneMinus,
            Mobius::InverseOfOneMinus => Mobius::OneMinusInverse,
            other => other,
        }
    }
}

/// `from(λ, 𝔏) ≅ to(λ', f(𝔏))` where `λ'[tau[i]] = λ[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub from: FamilyId,
    pub to: FamilyId,
    pub tau: [usize; 3],
    pub mobius: Mobius,
}

impl Relation {
    pub fn reversed(self) -> Self {
        let mut inv = [0; 3];
        for (i, &t) in self.tau.iter().enumerate() {
            inv[t] = i;
        }
        Relation {
            from: self.to,
            to: self.from,
            tau: inv,
            mobius: self.mobius.inverse(),
        }
    }

    /// The image of `fi` under the relation, if it applies to `fi`'s family.
    /// Validity of the image is not checked.
    pub fn apply(&self, fi: &FamilyInstance) -> Option<FamilyInstance> {
        if fi.id != self.from || fi.eigen_params.len() != 3 {
            return None;
        }
        let mut eigen = fi.eigen_params.clone();
        for (i, x) in fi.eigen_params.iter().enumerate() {
            eigen[self.tau[i]] = x.clone();
        }
        let fil_params = fi
            .fil_params
            .iter()
            .map(|x| self.mobius.apply(x))
            .collect::<Option<Vec<_>>>()?;
        Some(FamilyInstance::new(self.to, eigen, fil_params, fi.hodge))
    }
}

/// The catalog's isomorphism relations between distinct parameter values,
/// each listed in one direction.
pub fn relations() -> Vec<Relation> {
    let rel = |from: u8, to: u8, tau: [usize; 3], mobius: Mobius| Relation {
        from: FamilyId::Cris(from),
        to: FamilyId::Cris(to),
        tau,
        mobius,
    };
    let mut out = Vec::new();
    for (k, tau) in [
        (15, [0, 2, 1]),
        (16, [1, 0, 2]),
        (17, [1, 0, 2]),
        (18, [1, 0, 2]),
        (19, [0, 2, 1]),
        (20, [0, 2, 1]),
        (21, [2, 1, 0]),
        (22, [2, 1, 0]),
        (23, [0, 2, 1]),
        (24, [2, 1, 0]),
        (25, [1, 0, 2]),
    ] {
        out.push(rel(k, k, tau, Mobius::Identity));
    }
    out.extend(
        cris26_relations()
            .into_iter()
            .map(|(tau, m)| rel(26, 26, tau, m)),
    );
    for (from, to, tau) in [
        (17, 19, [2, 1, 0]),
        (17, 19, [1, 2, 0]),
        (17, 21, [0, 2, 1]),
        (17, 21, [2, 0, 1]),
        (19, 21, [1, 0, 2]),
        (19, 21, [1, 2, 0]),
        (18, 20, [1, 2, 0]),
        (18, 22, [0, 2, 1]),
        (20, 22, [1, 0, 2]),
        (23, 24, [1, 0, 2]),
        (23, 24, [1, 2, 0]),
        (23, 25, [2, 1, 0]),
        (23, 25, [2, 0, 1]),
        (24, 25, [0, 2, 1]),
        (24, 25, [1, 2, 0]),
    ] {
        out.push(rel(from, to, tau, Mobius::Identity));
    }
    out
}

/// The five non-trivial symmetries of the `Cris26` family.
pub fn cris26_relations() -> Vec<([usize; 3], Mobius)> {
    vec![
        ([1, 2, 0], Mobius::OneMinusInverse),
        ([2, 0, 1], Mobius::InverseOfOneMinus),
        ([0, 2, 1], Mobius::Inverse),
        ([2, 1, 0], Mobius::Ratio),
        ([1, 0, 2], Mobius::OneMinus),
    ]
}

/// Every valid instance reachable from `fi` through the relations, in
/// either direction; `fi` itself comes first.
pub fn equivalence_class(fi: &FamilyInstance) -> Vec<FamilyInstance> {
    let rels: Vec<Relation> = relations()
        .into_iter()
        .flat_map(|r| [r, r.reversed()])
        .collect();
    let mut seen = vec![fi.normalized()];
    let mut next = 0;
    while next < seen.len() {
        let current = seen[next].clone();
        next += 1;
        for r in &rels {
            let Some(image) = r.apply(&current) else {
                continue;
            };
            let image = image.normalized();
            if image.violations().is_empty() && !seen.contains(&image) {
                seen.push(image);
            }
        }
    }
    seen
}

/// Whether the two instances denote isomorphic modules according to the
/// catalog's equivalence data.
pub fn param_equivalent(a: &FamilyInstance, b: &FamilyInstance) -> bool {
    let b = b.normalized();
    if a.normalized() == b {
        return true;
    }
    if a.hodge != b.hodge || !a.violations().is_empty() {
        return false;
    }
    equivalence_class(a).contains(&b)
}
