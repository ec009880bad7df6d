//! The workbench commands. Each returns a [`Report`]; failures become
//! error reports rather than Rust errors, so the binary only prints.

use std::path::Path;

use phin_classifier::{
    classify as classify_module, enumerate_families, instantiate as instantiate_instance, is_admissible, reducibility,
    ClassifyError, FamilyInstance, InstanceDoc,
};
use phin_core::{matrix_doc, ElementDoc, HodgeType, ModuleDoc, PhiNModule, Subspace, Q64};
use phin_iso::are_isomorphic;
use serde_json::{json, Value};

use crate::files::parse_module_file;
use crate::{Report, Verdict, WorkbenchError};

pub(crate) fn q(x: Q64) -> String {
    x.to_string()
}

pub(crate) fn subspace_json(u: &Subspace) -> Value {
    json!(u.basis().iter().map(|v| v.iter().map(ElementDoc::from_element).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn finish(command: &str, args: &[String], out: Result<Report, WorkbenchError>) -> Report {
    out.unwrap_or_else(|e| Report::error(command, args, &e))
}

fn path_args(paths: &[&Path]) -> Vec<String> {
    paths.iter().map(|p| p.display().to_string()).collect()
}

/// Parses and validates a module file.
pub fn validate(path: &Path) -> Report {
    let args = path_args(&[path]);
    finish("validate", &args, (|| {
        let m = parse_module_file(path)?;
        let result = json!({ "valid": true, "n_rank": m.n_rank(), "hodge": m.hodge.to_string() });
        Ok(Report::new("validate", &args, Verdict::Affirmative, "valid module", result))
    })())
}

/// The admissibility verdict with the two total invariants. With
/// `witness`, an inadmissible verdict also names the violating subspace.
pub fn admissible(path: &Path, witness: bool) -> Report {
    let mut args = path_args(&[path]);
    if witness {
        args.push("--witness".into());
    }
    finish("admissible", &args, (|| {
        let m = parse_module_file(path)?;
        let report = is_admissible(&m)?;
        let mut result = json!({
            "admissible": report.admissible,
            "hodge_total": q(report.hodge_total),
            "newton_total": q(report.newton_total),
        });
        if let (true, Some(w)) = (witness, &report.witness) {
            result["witness"] = json!({
                "subspace": subspace_json(&w.member),
                "t_H": q(w.hodge),
                "t_N": q(w.newton),
            });
        }
        let (verdict, summary) = if report.admissible {
            (Verdict::Affirmative, "admissible".to_string())
        } else {
            let w = report.witness.as_ref().expect("inadmissible reports carry a witness");
            (Verdict::Negative, format!("not admissible: t_H = {} > t_N = {} on a {}-dimensional subspace", w.hodge, w.newton, w.member.dim()))
        };
        Ok(Report::new("admissible", &args, verdict, summary, result))
    })())
}

/// The catalog family, the transition onto its representative, and the
/// reducibility with submodules written in the input basis.
pub fn classify(path: &Path) -> Report {
    let args = path_args(&[path]);
    finish("classify", &args, (|| {
        let m = parse_module_file(path)?;
        let c = match classify_module(&m) {
            Ok(c) => c,
            Err(ClassifyError::NotAdmissible(report)) => {
                let result = json!({ "admissible": false, "newton_total": q(report.newton_total) });
                return Ok(Report::new("classify", &args, Verdict::Negative, "not admissible", result));
            }
            Err(e) => return Err(e.into()),
        };
        let red = reducibility(&c.instance)?;
        let back = c.transition.inverse().map_err(ClassifyError::from)?;
        let submodules = red
            .submodules
            .iter()
            .map(|u| Ok(subspace_json(&u.image(&back).map_err(ClassifyError::from)?)))
            .collect::<Result<Vec<_>, WorkbenchError>>()?;
        let result = json!({
            "family": c.instance.id.to_string(),
            "instance": c.instance.to_doc(),
            "transition": matrix_doc(&c.transition),
            "reducibility": red.kind.to_string(),
            "submodules": submodules,
        });
        let summary = format!("{} ({})", c.instance.id, red.kind);
        Ok(Report::new("classify", &args, Verdict::Affirmative, summary, result))
    })())
}

/// Direct isomorphism test; `witness` adds the matrix `P`.
pub fn iso(a: &Path, b: &Path, witness: bool) -> Report {
    let mut args = path_args(&[a, b]);
    if witness {
        args.push("--witness".into());
    }
    finish("iso", &args, (|| {
        let (ma, mb) = (parse_module_file(a)?, parse_module_file(b)?);
        let found = are_isomorphic(&ma, &mb)?;
        let mut result = json!({ "isomorphic": found.is_some() });
        if let (true, Some(w)) = (witness, &found) {
            result["witness"] = json!(w.to_doc());
        }
        Ok(match found {
            Some(_) => Report::new("iso", &args, Verdict::Affirmative, "isomorphic", result),
            None => Report::new("iso", &args, Verdict::Negative, "not isomorphic", result),
        })
    })())
}

/// Families realizable at Hodge type `(r, s)`, each with its conditions and
/// a witness valuation tuple.
pub fn enumerate(r: i64, s: i64, rank_n: Option<usize>) -> Report {
    let mut args = vec![format!("--r={r}"), format!("--s={s}")];
    if let Some(k) = rank_n {
        args.push(format!("--rank-n={k}"));
    }
    finish("enumerate", &args, (|| {
        let h = HodgeType::new(r, s);
        if !h.is_valid() {
            return Err(WorkbenchError::Usage(format!("Hodge type requires 0<r<s (got r={r}, s={s})")));
        }
        if rank_n.is_some_and(|k| k > 2) {
            return Err(WorkbenchError::Usage("rank of N must be 0, 1 or 2".into()));
        }
        let families: Vec<Value> = enumerate_families(h, rank_n)
            .iter()
            .map(|f| {
                json!({
                    "id": f.id.to_string(),
                    "conditions": f.conditions,
                    "witness_valuations": f.witness.iter().map(|&v| q(v)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let ids: Vec<&str> = families.iter().map(|f| f["id"].as_str().unwrap_or_default()).collect();
        let noun = if ids.len() == 1 { "family" } else { "families" };
        let summary = format!("{} {noun}: {}", ids.len(), ids.join(" "));
        let result = json!({ "hodge": h.to_string(), "rank_n": rank_n, "families": families });
        Ok(Report::new("enumerate", &args, Verdict::Affirmative, summary, result))
    })())
}

/// Builds the representative module of `family` from an inline parameter
/// document: the fields of an instance document other than `id`.
pub fn instantiate(family: &str, params: &str) -> Report {
    let args = vec![format!("--family={family}"), format!("--params={params}")];
    finish("instantiate", &args, (|| {
        let m = instantiate_from(family, params)?;
        let result = json!({ "module": ModuleDoc::from_module(&m) });
        Ok(Report::new("instantiate", &args, Verdict::Affirmative, format!("{family} representative"), result))
    })())
}

pub(crate) fn instantiate_from(family: &str, params: &str) -> Result<PhiNModule, WorkbenchError> {
    let mut doc: Value = serde_json::from_str(params).map_err(|e| WorkbenchError::parse("--params", &e))?;
    let Some(fields) = doc.as_object_mut() else {
        return Err(WorkbenchError::Usage("--params must be a JSON object".into()));
    };
    fields.insert("id".into(), json!(family));
    let doc: InstanceDoc = serde_json::from_value(doc).map_err(|e| WorkbenchError::parse("--params", &e))?;
    Ok(instantiate_instance(&FamilyInstance::from_doc(&doc)?)?)
}

/// Runs the certification campaign. A failed campaign is an error (exit 2)
/// whose result carries the first counterexample.
pub fn certify(cfg: &crate::CertifyConfig, workers: usize) -> Report {
    let mut args = vec![
        format!("--r={}", cfg.hodge.r),
        format!("--s={}", cfg.hodge.s),
        format!("--samples={}", cfg.samples),
        format!("--seed={}", cfg.seed),
    ];
    if let Some(f) = cfg.fault {
        args.push(format!("--fault={f}"));
    }
    if !cfg.hodge.is_valid() {
        let err = WorkbenchError::Usage(format!("Hodge type requires 0<r<s (got r={}, s={})", cfg.hodge.r, cfg.hodge.s));
        return Report::error("certify", &args, &err);
    }
    let campaign = crate::certify(cfg, workers);
    let result = serde_json::to_value(&campaign).expect("campaign reports serialize");
    let checked: usize = campaign.stages.iter().map(|s| s.passed + s.failed).sum();
    match campaign.first_counterexample() {
        None => Report::new("certify", &args, Verdict::Affirmative, format!("certified: {checked} checks passed"), result),
        Some(c) => {
            let msg = format!("{} #{}: {}", c.stage, c.index, c.reason);
            let mut report = Report::new("certify", &args, Verdict::Error, format!("counterexample in {msg}"), result);
            report.errors.push(msg);
            report
        }
    }
}
