use exact_linalg::{intertwiner_space, Matrix, MatrixSpace, Subspace, Vector};
use phin_core::{FieldElement, FieldSpec, Filtration, PhiNModule, Shape};

use crate::catalog::{self, CatalogEntry, Coord, Pattern};
use crate::instance::{pattern_filtration, pattern_vector};
use crate::normalize::{is_admissible, normalize};
use crate::{param_equivalent, ClassifyError, FamilyId, FamilyInstance};

/// The result of [`classify`].
///
/// `transition` carries the input module onto `instantiate(&instance)`:
/// `M phi M^-1`, `M N M^-1` and `M(L1)`, `M(L2)` are the representative's
/// data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub instance: FamilyInstance,
    pub transition: Matrix,
}

/// Identifies an admissible module with a catalog family.
///
/// Every family of the module's shape is tried. Matches in several
/// families happen at tied valuations, where the catalog's cross-family
/// relations identify them; the first in catalog order is returned. Any
/// other double match is an internal error.
pub fn classify(m: &PhiNModule) -> Result<Classification, ClassifyError> {
    let report = is_admissible(m)?;
    if !report.admissible {
        return Err(ClassifyError::NotAdmissible(Box::new(report)));
    }
    let mut matches = classify_candidates(m)?;
    match matches.len() {
        0 => Err(ClassifyError::NoFamilyMatch(format!(
            "{} module of Hodge type {}",
            normalize(m)?.shape,
            m.hodge
        ))),
        _ if matches[1..]
            .iter()
            .all(|c| param_equivalent(&matches[0].instance, &c.instance)) =>
        {
            Ok(matches.swap_remove(0))
        }
        _ => Err(ClassifyError::Internal(format!(
            "module matches several families: {}",
            matches
                .iter()
                .map(|c| c.instance.id.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// Every family whose pattern and conditions the module satisfies, without
/// the admissibility pre-check.
pub fn classify_candidates(m: &PhiNModule) -> Result<Vec<Classification>, ClassifyError> {
    let norm = normalize(m)?;
    let spec = m.field;
    let fil = m.fil.transport(&norm.transition)?;
    let commutant = MatrixSpace::from_basis(
        spec,
        3,
        3,
        intertwiner_space(&[
            (norm.phi.clone(), norm.phi.clone()),
            (norm.n.clone(), norm.n.clone()),
        ])?,
    );
    let orders = eigen_orders(norm.shape, &norm.eigen);
    let mut out = Vec::new();
    for id in FamilyId::all().filter(|id| id.shape() == norm.shape) {
        let entry = catalog::entry(id);
        for (perm, eigen) in &orders {
            let q = permutation_matrix(spec, perm);
            let fil_q = fil.transport(&q)?;
            let Some((g, params)) = match_pattern(&entry, spec, &commutant, &fil_q)? else {
                continue;
            };
            let instance = FamilyInstance::new(id, eigen.clone(), params, m.hodge);
            if !instance.violations().is_empty() {
                continue;
            }
            let transition = &(&g * &q) * &norm.transition;
            out.push(Classification {
                instance,
                transition,
            });
            break;
        }
    }
    Ok(out)
}

/// Reorderings of the eigenvalue list that keep the valuations in place,
/// identity first. Only the three-distinct-eigenvalue shape has any.
fn eigen_orders(shape: Shape, eigen: &[FieldElement]) -> Vec<([usize; 3], Vec<FieldElement>)> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    if shape != Shape::Crystalline(6) {
        return vec![([0, 1, 2], eigen.to_vec())];
    }
    PERMS
        .iter()
        .filter(|p| (0..3).all(|i| eigen[p[i]].valuation() == eigen[i].valuation()))
        .map(|p| (*p, p.iter().map(|&j| eigen[j].clone()).collect()))
        .collect()
}

/// `Q` with `Q e_{perm[i]} = e_i`, so that `Q diag(x) Q^-1 = diag(x[perm[0]], ..)`.
fn permutation_matrix(spec: FieldSpec, perm: &[usize; 3]) -> Matrix {
    Matrix::from_fn(spec, 3, 3, |i, j| {
        if perm[i] == j {
            FieldElement::one(spec)
        } else {
            FieldElement::zero(spec)
        }
    })
}

/// The coordinate classes a pattern forces to be equal, paired with the
/// coordinates forced to vanish.
fn pattern_relations(p: &Pattern) -> (Vec<usize>, Vec<Vec<usize>>) {
    let zeros = (0..3).filter(|&i| p[i] == Coord::Zero).collect();
    let mut classes: Vec<(Coord, Vec<usize>)> = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if *c == Coord::Zero {
            continue;
        }
        match classes.iter_mut().find(|(d, _)| d == c) {
            Some((_, v)) => v.push(i),
            None => classes.push((*c, vec![i])),
        }
    }
    (zeros, classes.into_iter().map(|(_, v)| v).collect())
}

/// Linear forms on `y` expressing that `y` has the shape of `p` (up to
/// the values of its parameters and an overall scale).
fn pattern_forms(p: &Pattern, y: &[FieldElement]) -> Vector {
    let (zeros, classes) = pattern_relations(p);
    let mut out: Vector = zeros.iter().map(|&i| y[i].clone()).collect();
    for class in classes {
        for w in class.windows(2) {
            out.push(&y[w[0]] - &y[w[1]]);
        }
    }
    out
}

/// Coordinate of the first `One` in a pattern.
fn pivot(p: &Pattern) -> Option<usize> {
    p.iter().position(|c| *c == Coord::One)
}

/// Reads parameter values off the unique (up to scale) vector of `s`
/// having the shape of `p`. `None` when there is no such vector or it is
/// not unique.
fn read_pattern(p: &Pattern, s: &Subspace) -> Option<Vec<(usize, FieldElement)>> {
    let spec = s.spec();
    let basis = s.basis();
    let (zeros, classes) = pattern_relations(p);
    let mut rows: Vec<Vector> = zeros
        .iter()
        .map(|&i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    for class in &classes {
        for w in class.windows(2) {
            rows.push(basis.iter().map(|b| &b[w[0]] - &b[w[1]]).collect());
        }
    }
    let solutions = if rows.is_empty() {
        (0..basis.len())
            .map(|i| exact_linalg::unit_vector(spec, basis.len(), i))
            .collect()
    } else {
        Matrix::from_rows(rows).ok()?.kernel()
    };
    if solutions.len() != 1 {
        return None;
    }
    let coeffs = &solutions[0];
    let mut w: Vector = vec![FieldElement::zero(spec); 3];
    for (c, b) in coeffs.iter().zip(basis) {
        for i in 0..3 {
            w[i] = &w[i] + &(c * &b[i]);
        }
    }
    let scale = match pivot(p) {
        Some(i) => w[i].clone(),
        None => w
            .iter()
            .zip(p)
            .find(|(x, c)| matches!(c, Coord::Proj(_)) && !x.is_zero())
            .map(|(x, _)| x.clone())?,
    };
    if scale.is_zero() {
        return None;
    }
    let inv = scale.inv().ok()?;
    let mut out: Vec<(usize, FieldElement)> = Vec::new();
    for (x, c) in w.iter().zip(p) {
        if let Coord::Param(k) | Coord::Proj(k) = c {
            if !out.iter().any(|(j, _)| j == k) {
                out.push((*k, x * &inv));
            }
        }
    }
    Some(out)
}

fn has_params(p: &Pattern) -> bool {
    p.iter()
        .any(|c| matches!(c, Coord::Param(_) | Coord::Proj(_)))
}

/// Looks for an element `g` of the commutant with `g(fil)` equal to the
/// pattern of `entry` at some parameters.
///
/// The flag is moved in two steps: first `L1` onto the pattern line, then,
/// inside the stabilizer of that line, `L2` onto a plane containing the
/// pattern's known vectors. The parameters are then read off and the
/// result is verified exactly.
fn match_pattern(
    entry: &CatalogEntry,
    spec: FieldSpec,
    commutant: &MatrixSpace,
    fil: &Filtration,
) -> Result<Option<(Matrix, Vec<FieldElement>)>, ClassifyError> {
    let x = fil.l1.basis()[0].clone();
    let lead = pivot(&entry.fil_s);
    let step1 = commutant.constrain(|g| Ok(pattern_forms(&entry.fil_s, &g.apply(&x)?)))?;
    let Some(g1) = step1.find_point(4, |g| {
        let y = g.apply(&x).expect("3x3");
        lead.map_or(true, |i| !y[i].is_zero()) && !g.determinant().expect("3x3").is_zero()
    }) else {
        return Ok(None);
    };
    let x1 = g1.apply(&x)?;
    let line = Subspace::span(spec, 3, &[x1.clone()])?;
    let Some(l1_params) = read_pattern(&entry.fil_s, &line) else {
        return Ok(None);
    };
    let l2 = fil.l2.image(&g1)?;

    let mut params: Vec<Option<FieldElement>> = vec![None; entry.domains.len()];
    for (k, v) in l1_params {
        params[k] = Some(v);
    }
    let known = |p: &Pattern, params: &[Option<FieldElement>]| {
        p.iter().all(|c| match c {
            Coord::Param(k) | Coord::Proj(k) => params[*k].is_some(),
            _ => true,
        })
    };
    let filled = |params: &[Option<FieldElement>]| -> Vec<FieldElement> {
        params
            .iter()
            .map(|p| p.clone().unwrap_or_else(|| FieldElement::zero(spec)))
            .collect()
    };
    let fixed: Vec<Vector> = entry
        .fil_r
        .iter()
        .filter(|p| known(p, &params))
        .map(|p| pattern_vector(spec, p, &filled(&params)))
        .collect();
    let k2 = Subspace::span(spec, 3, &fixed)?;
    let stabilizer = commutant
        .mapping_vector_into(&x1, &line)?
        .mapping_into(&k2, &l2)?;
    let Some(h) = stabilizer.find_invertible() else {
        return Ok(None);
    };
    let g2 = h.inverse()?;
    let l2_final = l2.image(&g2)?;

    let unread: Vec<&Pattern> = entry
        .fil_r
        .iter()
        .filter(|p| has_params(p) && !known(p, &params))
        .collect();
    for p in unread {
        let Some(read) = read_pattern(p, &l2_final) else {
            return Ok(None);
        };
        for (k, v) in read {
            match &params[k] {
                Some(old) if *old != v => return Ok(None),
                _ => params[k] = Some(v),
            }
        }
    }
    let Some(params) = params.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    let g = &g2 * &g1;
    let target = pattern_filtration(entry.id, spec, &params)?;
    if target != fil.transport(&g)? {
        return Ok(None);
    }
    Ok(Some((g, params)))
}
