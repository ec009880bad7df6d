//! The certification campaign: randomized and exhaustive checks of the
//! classifier against independent oracles, reproducible from a seed.
//!
//! Every sample draws from its own generator, seeded from the campaign
//! seed, the stage number and the sample index. Samples may run on any
//! number of workers; results are collected in index order, so the report
//! does not depend on the worker count.

use std::collections::{BTreeMap, HashSet};

use phin_classifier::sample::{admissible_valuations, random_instance, random_invertible, random_pattern_instance};
use phin_classifier::{
    classify, classify_candidates, instantiate, instantiate_unchecked, is_admissible, normalize, param_equivalent,
    valuation_grid, ClassifyError, FamilyId, FamilyInstance, InstanceDoc,
};
use phin_core::{
    check_admissibility, hodge_invariant, invariant_families, newton_invariant, AdmissibilityReport, FieldSpec,
    HodgeType, ModuleDoc, PhiNModule, Shape, SubobjectFamily,
};
use phin_iso::commutant_shape_check;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A deliberate defect, for checking that the campaign notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Treat the family's valuation conditions as empty, so the catalog
    /// check instantiates it at arbitrary grid valuations.
    DropConditions(FamilyId),
}

impl std::fmt::Display for Fault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fault::DropConditions(id) => write!(f, "drop-conditions:{id}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyConfig {
    pub hodge: HodgeType,
    pub samples: usize,
    pub seed: u64,
    pub field: FieldSpec,
    /// Invariant subspaces drawn per module for the admissibility oracle.
    pub oracle_samples: usize,
    pub fault: Option<Fault>,
}

/// The configuration as recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub r: i64,
    pub s: i64,
    pub prime: u32,
    pub ramification: u32,
    pub samples: usize,
    pub seed: u64,
    pub oracle_samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<String>,
}

impl CertifyConfig {
    pub fn new(hodge: HodgeType, samples: usize, seed: u64) -> Self {
        CertifyConfig { hodge, samples, seed, field: FieldSpec::default(), oracle_samples: 200, fault: None }
    }

    pub fn to_doc(&self) -> ConfigDoc {
        ConfigDoc {
            r: self.hodge.r,
            s: self.hodge.s,
            prime: self.field.prime(),
            ramification: self.field.ramification(),
            samples: self.samples,
            seed: self.seed,
            oracle_samples: self.oracle_samples,
            fault: self.fault.map(|f| f.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub stage: String,
    pub index: usize,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// The failing sample with the smallest index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: ConfigDoc,
    pub passed: bool,
    pub stages: Vec<StageReport>,
    /// Random modules by outcome: `inadmissible` or the family they
    /// classify into.
    pub outcomes: BTreeMap<String, usize>,
}

impl CampaignReport {
    pub fn stage(&self, name: &str) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.stages.iter().find_map(|s| s.first_counterexample.as_ref())
    }
}

/// The generator for sample `index` of stage `stage`.
pub fn sample_rng(seed: u64, stage: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stage.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

struct Outcome {
    label: Option<String>,
    failure: Option<Counterexample>,
}

impl Outcome {
    fn pass(label: Option<String>) -> Self {
        Outcome { label, failure: None }
    }
}

fn fail(stage: &str, index: usize, reason: impl Into<String>, m: Option<&PhiNModule>, fi: Option<&FamilyInstance>) -> Outcome {
    Outcome {
        label: None,
        failure: Some(Counterexample {
            stage: stage.into(),
            index,
            reason: reason.into(),
            module: m.map(ModuleDoc::from_module),
            instance: fi.map(FamilyInstance::to_doc),
        }),
    }
}

fn collect(name: &str, outcomes: &[Outcome], tally: &mut BTreeMap<String, usize>) -> StageReport {
    let failed = outcomes.iter().filter(|o| o.failure.is_some()).count();
    for label in outcomes.iter().filter_map(|o| o.label.as_ref()) {
        *tally.entry(label.clone()).or_default() += 1;
    }
    StageReport {
        name: name.into(),
        passed: outcomes.len() - failed,
        failed,
        first_counterexample: outcomes.iter().find_map(|o| o.failure.clone()),
    }
}

/// The admissibility verdict of a module together with the oracle's
/// finding: `Some(reason)` when the verdict disagrees with the subspaces.
pub struct OracleOutcome {
    pub report: AdmissibilityReport,
    pub disagreement: Option<String>,
}

/// Decides admissibility and checks the verdict against the stable
/// subspaces directly. An inadmissible verdict must carry a stable
/// subspace violating the inequality; for an admissible one, `samples`
/// members drawn from the stable families must all satisfy `t_H <= t_N`.
/// Each distinct member is checked for stability and both invariants are
/// recomputed from scratch.
pub fn oracle_check<R: Rng + ?Sized>(m: &PhiNModule, samples: usize, rng: &mut R) -> Result<OracleOutcome, ClassifyError> {
    let norm = normalize(m)?;
    let back = norm.transition.inverse()?;
    let families = invariant_families(&norm.phi, &norm.n, norm.shape)?
        .iter()
        .map(|f| f.transport(&back))
        .collect::<Result<Vec<_>, _>>()?;
    let report = check_admissibility(m, &families)?;
    let disagreement = if report.admissible {
        sampled_disagreement(m, &families, samples, rng)?
    } else {
        witness_disagreement(m, &report)?
    };
    Ok(OracleOutcome { report, disagreement })
}

fn witness_disagreement(m: &PhiNModule, report: &AdmissibilityReport) -> Result<Option<String>, ClassifyError> {
    let Some(w) = &report.witness else {
        return Ok(Some("inadmissible verdict without a witness".into()));
    };
    let stable = w.member.is_invariant(&m.phi)? && w.member.is_invariant(&m.n)?;
    let t_h = hodge_invariant(&w.member, &m.fil, m.hodge)?;
    let t_n = newton_invariant(&w.member, &m.phi)?;
    let violates = if w.member.dim() == 3 { t_h != t_n } else { t_h > t_n };
    Ok((!(stable && violates && t_h == w.hodge && t_n == w.newton))
        .then(|| format!("witness subspace {} does not violate admissibility", w.member)))
}

fn sampled_disagreement<R: Rng + ?Sized>(
    m: &PhiNModule,
    families: &[SubobjectFamily],
    samples: usize,
    rng: &mut R,
) -> Result<Option<String>, ClassifyError> {
    if families.is_empty() {
        return Ok(None);
    }
    let samplers = families.iter().map(|f| f.sampler(&m.fil)).collect::<Result<Vec<_>, _>>()?;
    let mut checked = HashSet::new();
    for _ in 0..samples {
        let u = samplers.choose(rng).expect("non-empty").sample(rng);
        if checked.contains(&u) {
            continue;
        }
        if !u.is_invariant(&m.phi)? || !u.is_invariant(&m.n)? {
            return Ok(Some(format!("sampled subspace {u} is not (phi, N)-stable")));
        }
        let (t_h, t_n) = (hodge_invariant(&u, &m.fil, m.hodge)?, newton_invariant(&u, &m.phi)?);
        if t_h > t_n {
            return Ok(Some(format!("admissible verdict, but t_H = {t_h} > t_N = {t_n} on {u}")));
        }
        checked.insert(u);
    }
    Ok(None)
}

/// A random module: admissibility against the oracle, then for admissible
/// modules a unique catalog match that transports onto its representative.
fn random_module_sample(cfg: &CertifyConfig, index: usize) -> Outcome {
    const STAGE: &str = "random_modules";
    let mut rng = sample_rng(cfg.seed, 0, index as u64);
    let m = crate::random::random_module(cfg.field, cfg.hodge, &mut rng);
    let mut run = || -> Result<Outcome, ClassifyError> {
        let oracle = oracle_check(&m, cfg.oracle_samples, &mut rng)?;
        if let Some(reason) = oracle.disagreement {
            return Ok(fail(STAGE, index, reason, Some(&m), None));
        }
        if !oracle.report.admissible {
            return Ok(match classify(&m) {
                Err(ClassifyError::NotAdmissible(_)) => Outcome::pass(Some("inadmissible".into())),
                other => fail(STAGE, index, format!("inadmissible module classified as {other:?}"), Some(&m), None),
            });
        }
        let candidates = classify_candidates(&m)?;
        let Some(first) = candidates.first() else {
            return Ok(fail(STAGE, index, "admissible module matches no family", Some(&m), None));
        };
        if let Some(other) = candidates.iter().find(|c| !param_equivalent(&first.instance, &c.instance)) {
            let reason = format!("matches inequivalent instances of {} and {}", first.instance.id, other.instance.id);
            return Ok(fail(STAGE, index, reason, Some(&m), Some(&first.instance)));
        }
        let back = m.transport(&first.transition)?;
        let rep = instantiate(&first.instance)?;
        if (back.phi, back.n, back.fil) != (rep.phi, rep.n, rep.fil) {
            return Ok(fail(STAGE, index, "transition does not reach the representative", Some(&m), Some(&first.instance)));
        }
        Ok(Outcome::pass(Some(first.instance.id.to_string())))
    };
    run().unwrap_or_else(|e| fail(STAGE, index, e.to_string(), Some(&m), None))
}

/// A random catalog instance in a random basis must classify back to an
/// equivalent instance.
fn round_trip_sample(cfg: &CertifyConfig, families: &[FamilyId], index: usize) -> Outcome {
    const STAGE: &str = "round_trips";
    let mut rng = sample_rng(cfg.seed, 1, index as u64);
    let id = *families.choose(&mut rng).expect("non-empty");
    let fi = random_instance(cfg.field, id, cfg.hodge, &mut rng).expect("families are realizable");
    let mut run = || -> Result<Outcome, ClassifyError> {
        let mut m = instantiate(&fi)?;
        if m.n_rank() == 0 {
            let eigenvalues = (0..3).map(|i| m.phi.get(i, i).clone()).collect();
            m.jordan = Some(phin_core::JordanHint { eigenvalues, change_of_basis: None });
        }
        let moved = m.transport(&random_invertible(cfg.field, &mut rng))?;
        let c = classify(&moved)?;
        Ok(if param_equivalent(&fi, &c.instance) {
            Outcome::pass(None)
        } else {
            fail(STAGE, index, format!("classified as {:?}", c.instance), Some(&moved), Some(&fi))
        })
    };
    run().unwrap_or_else(|e| fail(STAGE, index, e.to_string(), None, Some(&fi)))
}

fn commutant_sample(index: usize) -> Outcome {
    let shape = Shape::ALL[index];
    match commutant_shape_check(shape) {
        Ok(_) => Outcome::pass(None),
        Err(e) => fail("commutants", index, e.to_string(), None, None),
    }
}

/// The valuation tuples checked for a family: the first, middle and last
/// admissible ones, which include the ends of each range.
fn catalog_valuations(cfg: &CertifyConfig, id: FamilyId) -> Vec<Vec<phin_core::Q64>> {
    let e = cfg.field.ramification();
    let all = if cfg.fault == Some(Fault::DropConditions(id)) {
        valuation_grid(id.shape(), cfg.hodge, e)
    } else {
        admissible_valuations(id, cfg.hodge, e)
    };
    let mut picks: Vec<Vec<phin_core::Q64>> = Vec::new();
    if !all.is_empty() {
        for i in [0, all.len() / 2, all.len() - 1] {
            if !picks.contains(&all[i]) {
                picks.push(all[i].clone());
            }
        }
    }
    picks
}

/// Each catalog pick instantiates to an admissible module that classifies
/// back into the same family, up to the catalog's relations.
fn catalog_sample(cfg: &CertifyConfig, id: FamilyId, vals: &[phin_core::Q64], index: usize) -> Outcome {
    const STAGE: &str = "catalog";
    let mut rng = sample_rng(cfg.seed, 3, index as u64);
    let fi = random_pattern_instance(cfg.field, id, cfg.hodge, vals, &mut rng);
    let run = || -> Result<Outcome, ClassifyError> {
        let m = instantiate_unchecked(&fi)?;
        if !is_admissible(&m)?.admissible {
            return Ok(fail(STAGE, index, format!("{id} representative is not admissible"), Some(&m), Some(&fi)));
        }
        let c = classify(&m)?;
        Ok(if param_equivalent(&fi, &c.instance) {
            Outcome::pass(None)
        } else {
            fail(STAGE, index, format!("{id} representative classified as {}", c.instance.id), Some(&m), Some(&fi))
        })
    };
    run().unwrap_or_else(|e| fail(STAGE, index, e.to_string(), None, Some(&fi)))
}

/// Runs the campaign on `workers` threads (at least one).
pub fn certify(cfg: &CertifyConfig, workers: usize) -> CampaignReport {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool");
    pool.install(|| run_campaign(cfg))
}

fn run_campaign(cfg: &CertifyConfig) -> CampaignReport {
    let mut outcomes = BTreeMap::new();
    let mut stages = Vec::new();
    if cfg.samples == 0 {
        return CampaignReport { config: cfg.to_doc(), passed: true, stages, outcomes };
    }

    let random: Vec<Outcome> = (0..cfg.samples).into_par_iter().map(|i| random_module_sample(cfg, i)).collect();
    stages.push(collect("random_modules", &random, &mut outcomes));

    let realizable: Vec<FamilyId> =
        FamilyId::all().filter(|&id| !admissible_valuations(id, cfg.hodge, cfg.field.ramification()).is_empty()).collect();
    let trips: Vec<Outcome> = (0..cfg.samples).into_par_iter().map(|i| round_trip_sample(cfg, &realizable, i)).collect();
    stages.push(collect("round_trips", &trips, &mut BTreeMap::new()));

    let commutants: Vec<Outcome> = (0..Shape::ALL.len()).into_par_iter().map(commutant_sample).collect();
    stages.push(collect("commutants", &commutants, &mut BTreeMap::new()));

    let picks: Vec<(FamilyId, Vec<phin_core::Q64>)> =
        FamilyId::all().flat_map(|id| catalog_valuations(cfg, id).into_iter().map(move |v| (id, v))).collect();
    let catalog: Vec<Outcome> =
        picks.par_iter().enumerate().map(|(i, (id, v))| catalog_sample(cfg, *id, v, i)).collect();
    stages.push(collect("catalog", &catalog, &mut BTreeMap::new()));

    let passed = stages.iter().all(|s| s.failed == 0);
    CampaignReport { config: cfg.to_doc(), passed, stages, outcomes }
}
