use exact_linalg::Subspace;
use valued_field::{Valuation, Q64};

use crate::{hodge_invariant, CoreError, PhiNModule, SubobjectFamily};

/// Why a module fails to be admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityWitness {
    /// The offending family, or `None` when `t_H(D) != t_N(D)`.
    pub family: Option<SubobjectFamily>,
    /// A concrete subspace exhibiting the failure.
    pub member: Subspace,
    pub hodge: Q64,
    pub newton: Q64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// `t_H(D) = r + s`.
    pub hodge_total: Q64,
    /// `t_N(D) = v(det phi)`.
    pub newton_total: Q64,
    pub witness: Option<AdmissibilityWitness>,
}

/// Decides admissibility of `m` given the complete list of its stable
/// subspace families, written in the same basis as `m`.
///
/// The first failing condition is reported: the total invariants first,
/// then the families in order.
pub fn check_admissibility(
    m: &PhiNModule,
    families: &[SubobjectFamily],
) -> Result<AdmissibilityReport, CoreError> {
    let violations = m.validate();
    if !violations.is_empty() {
        return Err(CoreError::Invalid(violations));
    }
    let hodge_total = Q64::from_integer(m.hodge.total());
    let newton_total = match m.phi.determinant()?.valuation() {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("validated modules have invertible phi"),
    };
    let mut report = AdmissibilityReport { admissible: true, hodge_total, newton_total, witness: None };
    if hodge_total != newton_total {
        report.admissible = false;
        report.witness = Some(AdmissibilityWitness {
            family: None,
            member: Subspace::full(m.field, 3),
            hodge: hodge_total,
            newton: newton_total,
        });
        return Ok(report);
    }
    for f in families {
        let member = f.max_member(&m.fil)?;
        let hodge = hodge_invariant(&member, &m.fil, m.hodge)?;
        if hodge > f.newton() {
            report.admissible = false;
            report.witness =
                Some(AdmissibilityWitness { family: Some(f.clone()), member, hodge, newton: f.newton() });
            return Ok(report);
        }
    }
    Ok(report)
}
