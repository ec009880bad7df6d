use exact_linalg::{Subspace, Vector};
use phin_core::{
    standard_n, standard_phi, ElementDoc, FieldDoc, FieldElement, FieldSpec, Filtration, HodgeDoc,
    HodgeType, PhiNModule, Q64,
};
use serde::{Deserialize, Serialize};

use crate::catalog::{self, Coord, ParamDomain, Pattern, Vals};
use crate::{ClassifyError, FamilyId};

/// A family together with its eigenvalue and filtration parameters.
///
/// `eigen_params` is `[λ]`, `[λ, λ3]`, `[λ1, λ2, λ3]` or `[λ, λ2]`
/// depending on the family's shape; `fil_params` are the 𝔏's in pattern
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub eigen_params: Vec<FieldElement>,
    pub fil_params: Vec<FieldElement>,
    pub hodge: HodgeType,
}

/// The JSON form of a [`FamilyInstance`]. `field` defaults to `(2, 6)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDoc>,
    pub id: String,
    pub eigen_params: Vec<ElementDoc>,
    #[serde(default)]
    pub fil_params: Vec<ElementDoc>,
    pub hodge: HodgeDoc,
}

impl FamilyInstance {
    pub fn new(
        id: FamilyId,
        eigen_params: Vec<FieldElement>,
        fil_params: Vec<FieldElement>,
        hodge: HodgeType,
    ) -> Self {
        FamilyInstance {
            id,
            eigen_params,
            fil_params,
            hodge,
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.eigen_params
            .first()
            .map_or_else(FieldSpec::default, FieldElement::spec)
    }

    /// Valuations of the eigenvalue parameters (zero for a zero parameter,
    /// which validation rejects anyway).
    pub fn valuations(&self) -> Vec<Q64> {
        self.eigen_params
            .iter()
            .map(|x| x.valuation().finite().unwrap_or_default())
            .collect()
    }

    pub fn vals(&self) -> Vals {
        Vals::new(self.hodge, &self.valuations())
    }

    /// Every violated domain or valuation condition, in words.
    pub fn violations(&self) -> Vec<String> {
        let mut out = self.structural_violations();
        if out.is_empty() {
            out.extend(
                catalog::failed_conditions(self.id, &self.vals())
                    .into_iter()
                    .map(String::from),
            );
        }
        out
    }

    /// The checks that do not involve valuations.
    fn structural_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let entry = catalog::entry(self.id);
        let arity = self.id.shape().eigen_arity();
        if !self.hodge.is_valid() {
            out.push(format!(
                "Hodge type requires 0<r<s (got r={}, s={})",
                self.hodge.r, self.hodge.s
            ));
        }
        if self.eigen_params.len() != arity {
            out.push(format!(
                "expected {arity} eigenvalue parameters, found {}",
                self.eigen_params.len()
            ));
        }
        if self.fil_params.len() != entry.domains.len() {
            out.push(format!(
                "expected {} filtration parameters, found {}",
                entry.domains.len(),
                self.fil_params.len()
            ));
        }
        if !out.is_empty() {
            return out;
        }
        let spec = self.spec();
        if self
            .eigen_params
            .iter()
            .chain(&self.fil_params)
            .any(|x| x.spec() != spec)
        {
            out.push("parameters lie in different fields".into());
            return out;
        }
        if self.eigen_params.iter().any(FieldElement::is_zero) {
            out.push("eigenvalues must be nonzero".into());
        }
        let mut projective = Vec::new();
        for (i, (x, d)) in self.fil_params.iter().zip(&entry.domains).enumerate() {
            let name = param_name(&entry.domains, i);
            match d {
                ParamDomain::Any => {}
                ParamDomain::NonZero if x.is_zero() => out.push(format!("{name} ≠ 0 violated")),
                ParamDomain::NotZeroOne if x.is_zero() || x.is_one() => {
                    out.push(format!("{name} ∉ {{0,1}} violated"))
                }
                ParamDomain::Projective => projective.push(x),
                _ => {}
            }
        }
        if !projective.is_empty() && projective.iter().all(|x| x.is_zero()) {
            out.push("(𝔏1, 𝔏2) must not both vanish".into());
        }
        if out.is_empty() {
            if let Err(e) = standard_phi(self.id.shape(), &self.eigen_params) {
                out.push(e.to_string());
            }
        }
        out
    }

    /// The same instance with any projective parameter pair scaled so its
    /// first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let entry = catalog::entry(self.id);
        let mut out = self.clone();
        if entry.domains.first() == Some(&ParamDomain::Projective) {
            if let Some(lead) = out.fil_params.iter().find(|x| !x.is_zero()).cloned() {
                let inv = lead.inv().expect("nonzero");
                for x in &mut out.fil_params {
                    *x = &*x * &inv;
                }
            }
        }
        out
    }

    pub fn to_doc(&self) -> InstanceDoc {
        InstanceDoc {
            field: Some(FieldDoc {
                prime: self.spec().prime() as i64,
                ramification: self.spec().ramification() as i64,
            }),
            id: self.id.to_string(),
            eigen_params: self
                .eigen_params
                .iter()
                .map(ElementDoc::from_element)
                .collect(),
            fil_params: self
                .fil_params
                .iter()
                .map(ElementDoc::from_element)
                .collect(),
            hodge: HodgeDoc {
                r: self.hodge.r,
                s: self.hodge.s,
            },
        }
    }

    pub fn from_doc(doc: &InstanceDoc) -> Result<Self, ClassifyError> {
        let spec = match doc.field {
            Some(f) => FieldSpec::new(f.prime, f.ramification)?,
            None => FieldSpec::default(),
        };
        let id = doc.id.parse()?;
        let read = |xs: &[ElementDoc]| -> Result<Vec<FieldElement>, ClassifyError> {
            xs.iter().map(|x| Ok(x.to_element(spec)?)).collect()
        };
        Ok(FamilyInstance {
            id,
            eigen_params: read(&doc.eigen_params)?,
            fil_params: read(&doc.fil_params)?,
            hodge: HodgeType::new(doc.hodge.r, doc.hodge.s),
        })
    }
}

fn param_name(domains: &[ParamDomain], i: usize) -> String {
    if domains.len() == 1 {
        "𝔏".into()
    } else {
        format!("𝔏{}", i + 1)
    }
}

pub(crate) fn pattern_vector(spec: FieldSpec, p: &Pattern, params: &[FieldElement]) -> Vector {
    p.iter()
        .map(|c| match c {
            Coord::Zero => FieldElement::zero(spec),
            Coord::One => FieldElement::one(spec),
            Coord::Param(i) | Coord::Proj(i) => params[*i].clone(),
        })
        .collect()
}

/// The filtration a family's pattern takes at the given parameters.
pub fn pattern_filtration(
    id: FamilyId,
    spec: FieldSpec,
    params: &[FieldElement],
) -> Result<Filtration, ClassifyError> {
    let e = catalog::entry(id);
    let l1 = Subspace::span(spec, 3, &[pattern_vector(spec, &e.fil_s, params)])?;
    let l2 = Subspace::span(
        spec,
        3,
        &[
            pattern_vector(spec, &e.fil_r[0], params),
            pattern_vector(spec, &e.fil_r[1], params),
        ],
    )?;
    Ok(Filtration::new(l1, l2))
}

/// The representative module of `fi`, after checking every domain and
/// valuation condition.
pub fn instantiate(fi: &FamilyInstance) -> Result<PhiNModule, ClassifyError> {
    let violations = fi.violations();
    if !violations.is_empty() {
        return Err(ClassifyError::Constraint {
            id: fi.id.to_string(),
            violations,
        });
    }
    build(fi)
}

/// The module with the family's `(phi, N)` and filtration pattern, ignoring
/// the valuation conditions. Such a module is admissible exactly when the
/// conditions hold; this is what the tightness checks exercise.
pub fn instantiate_unchecked(fi: &FamilyInstance) -> Result<PhiNModule, ClassifyError> {
    let violations = fi.structural_violations();
    if !violations.is_empty() {
        return Err(ClassifyError::Constraint {
            id: fi.id.to_string(),
            violations,
        });
    }
    build(fi)
}

fn build(fi: &FamilyInstance) -> Result<PhiNModule, ClassifyError> {
    let spec = fi.spec();
    let phi = standard_phi(fi.id.shape(), &fi.eigen_params)?;
    let n = standard_n(spec, fi.id.n_rank())?;
    let fil = pattern_filtration(fi.id, spec, &fi.fil_params)?;
    Ok(PhiNModule::new(spec, fi.hodge, phi, n, fil, None)?)
}
