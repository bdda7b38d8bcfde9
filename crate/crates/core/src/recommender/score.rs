use serde::{Deserialize, Serialize};

use super::scenario::WEIGHT_SUM_TOL;
use super::{Candidate, Scenario};
use crate::registry::{CodeSpec, MaxDistance, Transversal};

/// Weights of the seven score components plus the multi-qubit-gate boost.
///
/// The seven base weights sum to 1. When the scenario needs logical
/// multi-qubit gates, `tg_boost * f_tg` is added on top, so totals lie in
/// `[0, 1 + tg_boost]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoreWeights {
    pub w_dist: f64,
    pub w_thr: f64,
    pub w_cx: f64,
    pub w_dec: f64,
    pub w_tg: f64,
    pub w_real: f64,
    pub w_util: f64,
    pub tg_boost: f64,
}

impl Default for ScoreWeights {
    /// Tuned so the three reference scenarios rank as published. Complexity
    /// and transversal-gate weights end up at zero: heavy-hexagon (complexity
    /// rank 6) must outrank Steane (rank 2) in the large-budget simulation
    /// scenario, and the transversal component acts only through the boost.
    fn default() -> Self {
        Self {
            w_dist: 0.55,
            w_thr: 0.10,
            w_cx: 0.0,
            w_dec: 0.10,
            w_tg: 0.0,
            w_real: 0.05,
            w_util: 0.20,
            tg_boost: 0.80,
        }
    }
}

impl ScoreWeights {
    pub fn base(&self) -> [f64; 7] {
        [
            self.w_dist,
            self.w_thr,
            self.w_cx,
            self.w_dec,
            self.w_tg,
            self.w_real,
            self.w_util,
        ]
    }

    pub fn validate(&self) -> Result<(), String> {
        let base = self.base();
        if base.iter().chain([&self.tg_boost]).any(|w| !w.is_finite() || *w < 0.0) {
            return Err("score weights must be finite and nonnegative".into());
        }
        if (base.iter().sum::<f64>() - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err("base score weights must sum to 1".into());
        }
        Ok(())
    }
}

/// Unweighted component values, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScoreBreakdown {
    pub f_dist: f64,
    pub f_thr: f64,
    pub f_cx: f64,
    pub f_dec: f64,
    pub f_tg: f64,
    pub f_real: f64,
    pub f_util: f64,
    /// `tg_boost * f_tg` when multi-qubit gates are required, else 0.
    pub boost: f64,
}

impl ScoreBreakdown {
    pub fn total(&self, w: &ScoreWeights) -> f64 {
        let parts = [
            self.f_dist,
            self.f_thr,
            self.f_cx,
            self.f_dec,
            self.f_tg,
            self.f_real,
            self.f_util,
        ];
        parts.iter().zip(w.base()).map(|(f, w)| f * w).sum::<f64>() + self.boost
    }
}

pub fn transversal_score(t: Transversal) -> f64 {
    match t {
        Transversal::None => 0.0,
        Transversal::LatticeSurgery => 0.3,
        Transversal::TpgLatticeSurgery => 0.4,
        Transversal::Teleportation => 0.6,
        Transversal::Clifford => 1.0,
    }
}

/// Distance used for normalization: the achieved distance, or the fixed
/// distance of a fixed-structure code.
pub fn effective_distance(code: &CodeSpec, md: MaxDistance) -> u64 {
    match md {
        MaxDistance::Achievable(d) => d,
        _ => code.distance_domain.min_distance(),
    }
}

/// Scores one surviving code relative to the cohort of all survivors.
pub fn score(
    candidate: &Candidate<'_>,
    scenario: &Scenario,
    p_eff: f64,
    cohort_max_distance: u64,
    weights: &ScoreWeights,
) -> ScoreBreakdown {
    let code = candidate.code;
    let d_eff = effective_distance(code, candidate.max_distance);
    let f_dist = if cohort_max_distance == 0 {
        0.0
    } else {
        d_eff as f64 / cohort_max_distance as f64
    };
    let f_thr = if p_eff <= 0.0 {
        1.0
    } else {
        ((code.threshold / p_eff).log10() / 2.0).clamp(0.0, 1.0)
    };
    let f_cx = f64::from(6 - code.complexity.0.clamp(1, 6)) / 5.0;
    let f_dec = code.decoder_count().min(10) as f64 / 10.0;
    let f_tg = transversal_score(code.transversal);
    let f_real = code.hardware_realizations().min(6) as f64 / 6.0;
    let k = code.logical_qubits_per_block;
    let blocks = scenario.q_orig.div_ceil(k);
    let f_util = scenario.q_orig as f64 / (blocks * k) as f64;
    let boost = if scenario.multi_q_gate {
        weights.tg_boost * f_tg
    } else {
        0.0
    };
    ScoreBreakdown {
        f_dist,
        f_thr,
        f_cx,
        f_dec,
        f_tg,
        f_real,
        f_util,
        boost,
    }
}
