//! Multi-stage filtration and weighted ranking of codes for a scenario.
//!
//! Codes pass through three elimination stages:
//!
//! 1. **compatibility**: error type, qubit technology, multi-qubit gate
//!    support, and whether even the smallest instance fits the hardware;
//! 2. **practicality**: effective error rate against threshold, and the
//!    largest distance the qubit budget allows;
//! 3. **scalability**: non-scalable codes are dropped once more than one
//!    logical qubit is needed.
//!
//! Survivors are scored, sorted, and re-checked against every hard
//! constraint before being returned. Every verdict is recorded in a
//! [`FiltrationTrace`].

mod scenario;
mod score;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::registry::{self, CodeSpec, MaxDistance, Registry, Technology};

pub use scenario::{effective_error_rate, ErrorWeights, Scenario};
pub use score::{effective_distance, score, transversal_score, ScoreBreakdown, ScoreWeights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Compatibility,
    Practicality,
    Scalability,
    Review,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Compatibility => "compatibility",
            Stage::Practicality => "practicality",
            Stage::Scalability => "scalability",
            Stage::Review => "review",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Passed,
    Eliminated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceEntry {
    pub stage: Stage,
    pub code: String,
    pub verdict: Verdict,
    pub reason: String,
}

/// Per-stage record of which codes passed and why the others were dropped.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FiltrationTrace {
    pub entries: Vec<TraceEntry>,
}

impl FiltrationTrace {
    pub fn stage(&self, stage: Stage) -> impl Iterator<Item = &TraceEntry> {
        self.entries.iter().filter(move |e| e.stage == stage)
    }

    pub fn entry(&self, stage: Stage, code: &str) -> Option<&TraceEntry> {
        self.stage(stage).find(|e| e.code == code)
    }

    /// The entry that removed `code`, if any stage did.
    pub fn elimination(&self, code: &str) -> Option<&TraceEntry> {
        self.entries
            .iter()
            .find(|e| e.code == code && e.verdict == Verdict::Eliminated)
    }

    pub fn survivors(&self, stage: Stage) -> Vec<&str> {
        self.stage(stage)
            .filter(|e| e.verdict == Verdict::Passed)
            .map(|e| e.code.as_str())
            .collect()
    }
}

/// A code still in the running, with its budget-limited distance once known.
#[derive(Debug, Clone, Copy)]
pub struct Candidate<'a> {
    pub code: &'a CodeSpec,
    pub max_distance: MaxDistance,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendation {
    pub id: String,
    pub max_distance: MaxDistance,
    pub score: f64,
    pub breakdown: ScoreBreakdown,
}

/// Ranked output of [`recommend`], highest score first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendations {
    pub scenario: Scenario,
    pub effective_error_rate: f64,
    pub recommendations: Vec<Recommendation>,
    pub trace: FiltrationTrace,
}

impl Recommendations {
    pub fn ids(&self) -> Vec<&str> {
        self.recommendations.iter().map(|r| r.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Recommendation> {
        self.recommendations.iter().find(|r| r.id == id)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RecommendOptions {
    #[serde(rename = "error")]
    pub err_weights: ErrorWeights,
    #[serde(rename = "score")]
    pub score_weights: ScoreWeights,
    #[serde(skip)]
    pub top_n: Option<usize>,
}

impl RecommendOptions {
    /// Parses a weights file: `{"error": {...}, "score": {...}}`, either
    /// section optional. Values are checked later by [`recommend`].
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RecommendError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("internal consistency failure: `{code}` violates {constraint}")]
    Consistency { code: String, constraint: String },
}

fn passed(stage: Stage, code: &CodeSpec, reason: impl Into<String>) -> TraceEntry {
    TraceEntry {
        stage,
        code: code.id.clone(),
        verdict: Verdict::Passed,
        reason: reason.into(),
    }
}

fn eliminated(stage: Stage, code: &CodeSpec, reasons: Vec<String>) -> TraceEntry {
    TraceEntry {
        stage,
        code: code.id.clone(),
        verdict: Verdict::Eliminated,
        reason: reasons.join("; "),
    }
}

/// Hard-constraint failures checked in the compatibility stage.
fn compatibility_failures(code: &CodeSpec, scenario: &Scenario) -> Vec<String> {
    let mut reasons = Vec::new();
    if !code.protection.covers(scenario.err_type) {
        reasons.push(format!(
            "error type: protection does not cover {} errors",
            scenario.err_type
        ));
    }
    if !code.realized_on(scenario.q_type) {
        reasons.push(format!("realization: not realized on {}", scenario.q_type));
    }
    if scenario.multi_q_gate && code.logical_qubits_per_block > 1 {
        reasons.push(format!(
            "multi-block gate: {} logical qubits share a block, no intra-block logical gates",
            code.logical_qubits_per_block
        ));
    }
    let d_min = code.distance_domain.min_distance();
    match registry::physical_qubits(code, d_min, scenario.q_orig) {
        Ok(q) if q <= scenario.max_q_avail => {}
        Ok(q) => reasons.push(format!(
            "feasibility: {q} qubits needed at d = {d_min}, {} available",
            scenario.max_q_avail
        )),
        Err(e) => reasons.push(format!("feasibility: {e}")),
    }
    reasons
}

/// Stage 1: drops codes that cannot serve the scenario at all.
pub fn stage1_compatibility<'a>(scenario: &Scenario, registry: &'a Registry) -> (Vec<&'a CodeSpec>, Vec<TraceEntry>) {
    let mut survivors = Vec::new();
    let mut entries = Vec::new();
    for code in registry.iter() {
        let reasons = compatibility_failures(code, scenario);
        if reasons.is_empty() {
            let tech = if scenario.q_type == Technology::Simulation {
                "simulation".to_string()
            } else {
                format!("realized on {}", scenario.q_type)
            };
            entries.push(passed(
                Stage::Compatibility,
                code,
                format!("covers {}; {tech}", scenario.err_type),
            ));
            survivors.push(code);
        } else {
            entries.push(eliminated(Stage::Compatibility, code, reasons));
        }
    }
    (survivors, entries)
}

/// Stage 2: threshold check and budget-limited distance.
pub fn stage2_practicality<'a>(
    survivors: &[&'a CodeSpec],
    scenario: &Scenario,
    err_weights: &ErrorWeights,
) -> (Vec<Candidate<'a>>, Vec<TraceEntry>) {
    let p_eff = effective_error_rate(scenario, err_weights);
    let mut out = Vec::new();
    let mut entries = Vec::new();
    for &code in survivors {
        let md = registry::max_distance(code, scenario.max_q_avail, scenario.q_orig);
        let mut reasons = Vec::new();
        if p_eff >= code.threshold {
            reasons.push(format!(
                "threshold: effective error rate {p_eff:e} >= threshold {:e}",
                code.threshold
            ));
        }
        if md == MaxDistance::Infeasible {
            reasons.push(format!(
                "budget: no admissible distance fits {} qubits for {} logical",
                scenario.max_q_avail, scenario.q_orig
            ));
        }
        if reasons.is_empty() {
            entries.push(passed(
                Stage::Practicality,
                code,
                format!("{p_eff:e} < threshold {:e}; max distance {md}", code.threshold),
            ));
            out.push(Candidate {
                code,
                max_distance: md,
            });
        } else {
            entries.push(eliminated(Stage::Practicality, code, reasons));
        }
    }
    (out, entries)
}

/// Stage 3: non-scalable codes only serve single-logical-qubit workloads.
pub fn stage3_scalability<'a>(survivors: &[Candidate<'a>], scenario: &Scenario) -> (Vec<Candidate<'a>>, Vec<TraceEntry>) {
    let mut out = Vec::new();
    let mut entries = Vec::new();
    for cand in survivors {
        let code = cand.code;
        if code.scalable {
            entries.push(passed(Stage::Scalability, code, "scalable"));
            out.push(*cand);
        } else if scenario.q_orig <= 1 {
            entries.push(passed(Stage::Scalability, code, "not scalable, single logical qubit"));
            out.push(*cand);
        } else {
            entries.push(eliminated(
                Stage::Scalability,
                code,
                vec![format!("scalability: not scalable and {} logical qubits needed", scenario.q_orig)],
            ));
        }
    }
    (out, entries)
}

/// Re-asserts every hard constraint on a ranked survivor.
fn review(cand: &Candidate<'_>, scenario: &Scenario, p_eff: f64) -> Result<(), RecommendError> {
    let code = cand.code;
    let fail = |constraint: String| RecommendError::Consistency {
        code: code.id.clone(),
        constraint,
    };
    if let Some(reason) = compatibility_failures(code, scenario).into_iter().next() {
        return Err(fail(reason));
    }
    if p_eff >= code.threshold {
        return Err(fail("threshold".into()));
    }
    let d = match cand.max_distance {
        MaxDistance::Achievable(d) => d,
        MaxDistance::FixedNa => code.distance_domain.min_distance(),
        MaxDistance::Infeasible => return Err(fail("budget (infeasible)".into())),
    };
    match registry::physical_qubits(code, d, scenario.q_orig) {
        Ok(q) if q <= scenario.max_q_avail => {}
        _ => return Err(fail(format!("budget at d = {d}"))),
    }
    if !code.scalable && scenario.q_orig > 1 {
        return Err(fail("scalability".into()));
    }
    Ok(())
}

/// Runs the full pipeline and returns the ranked survivors with the trace.
pub fn recommend(
    scenario: &Scenario,
    registry: &Registry,
    options: &RecommendOptions,
) -> Result<Recommendations, RecommendError> {
    scenario.validate().map_err(RecommendError::InvalidScenario)?;
    options.err_weights.validate().map_err(RecommendError::InvalidWeights)?;
    options.score_weights.validate().map_err(RecommendError::InvalidWeights)?;

    let p_eff = effective_error_rate(scenario, &options.err_weights);
    let mut trace = FiltrationTrace::default();

    let (s1, e1) = stage1_compatibility(scenario, registry);
    trace.entries.extend(e1);
    let (s2, e2) = stage2_practicality(&s1, scenario, &options.err_weights);
    trace.entries.extend(e2);
    let (s3, e3) = stage3_scalability(&s2, scenario);
    trace.entries.extend(e3);

    let cohort_max = s3
        .iter()
        .map(|c| effective_distance(c.code, c.max_distance))
        .max()
        .unwrap_or(0);
    let mut ranked: Vec<(Candidate<'_>, Recommendation)> = s3
        .iter()
        .map(|cand| {
            let breakdown = score(cand, scenario, p_eff, cohort_max, &options.score_weights);
            let rec = Recommendation {
                id: cand.code.id.clone(),
                max_distance: cand.max_distance,
                score: breakdown.total(&options.score_weights),
                breakdown,
            };
            (*cand, rec)
        })
        .collect();
    ranked.sort_by(|(_, a), (_, b)| {
        b.score
            .partial_cmp(&a.score)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.id.cmp(&b.id))
    });

    for (cand, rec) in &ranked {
        review(cand, scenario, p_eff)?;
        trace.entries.push(passed(
            Stage::Review,
            cand.code,
            format!("score {:.4}", rec.score),
        ));
    }

    let mut recommendations: Vec<Recommendation> = ranked.into_iter().map(|(_, r)| r).collect();
    if let Some(n) = options.top_n {
        recommendations.truncate(n);
    }
    Ok(Recommendations {
        scenario: scenario.clone(),
        effective_error_rate: p_eff,
        recommendations,
        trace,
    })
}
