use serde::{Deserialize, Serialize};

use crate::registry::{ErrorType, Technology};

/// A user's hardware and workload description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub q_type: Technology,
    /// Physical qubits available.
    pub max_q_avail: u64,
    /// Logical qubits the workload needs.
    pub q_orig: u64,
    /// Whether logical multi-qubit gates are required.
    pub multi_q_gate: bool,
    pub err_type: ErrorType,
    pub dep_err: f64,
    pub gate_err: f64,
    pub read_err: f64,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_q_avail < 1 {
            return Err("max_q_avail must be >= 1".into());
        }
        if self.q_orig < 1 {
            return Err("q_orig must be >= 1".into());
        }
        for (name, p) in [
            ("dep_err", self.dep_err),
            ("gate_err", self.gate_err),
            ("read_err", self.read_err),
        ] {
            if !(0.0..1.0).contains(&p) {
                return Err(format!("{name} must be a probability in [0, 1), got {p}"));
            }
        }
        Ok(())
    }
}

/// Relative weight of each error source in the effective error rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorWeights {
    pub w_gate: f64,
    pub w_dep: f64,
    pub w_read: f64,
}

impl Default for ErrorWeights {
    fn default() -> Self {
        Self {
            w_gate: 0.6,
            w_dep: 0.3,
            w_read: 0.1,
        }
    }
}

pub(crate) const WEIGHT_SUM_TOL: f64 = 1e-9;

impl ErrorWeights {
    pub fn validate(&self) -> Result<(), String> {
        let ws = [self.w_gate, self.w_dep, self.w_read];
        if ws.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err("error weights must be finite and nonnegative".into());
        }
        if (ws.iter().sum::<f64>() - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err("error weights must sum to 1".into());
        }
        if !(self.w_gate > self.w_dep && self.w_dep > self.w_read) {
            return Err("error weights must satisfy w_gate > w_dep > w_read".into());
        }
        Ok(())
    }
}

/// Weighted combination of the scenario's three error rates.
pub fn effective_error_rate(scenario: &Scenario, weights: &ErrorWeights) -> f64 {
    weights.w_gate * scenario.gate_err + weights.w_dep * scenario.dep_err + weights.w_read * scenario.read_err
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario(gate: f64, dep: f64, read: f64) -> Scenario {
        Scenario {
            q_type: Technology::Simulation,
            max_q_avail: 100,
            q_orig: 1,
            multi_q_gate: false,
            err_type: ErrorType::AllPauli,
            dep_err: dep,
            gate_err: gate,
            read_err: read,
        }
    }

    #[test]
    fn effective_rate_is_linear_combination() {
        let w = ErrorWeights::default();
        let p = effective_error_rate(&scenario(1e-3, 1e-4, 1e-2), &w);
        assert!((p - 1.63e-3).abs() < 1e-15);
        let p = effective_error_rate(&scenario(1e-3, 1e-3, 1e-1), &w);
        assert!((p - 1.09e-2).abs() < 1e-15);
        assert_eq!(effective_error_rate(&scenario(0.0, 0.0, 0.0), &w), 0.0);
    }

    #[test]
    fn weight_validation() {
        assert!(ErrorWeights::default().validate().is_ok());
        let flat = ErrorWeights {
            w_gate: 0.4,
            w_dep: 0.4,
            w_read: 0.2,
        };
        assert!(flat.validate().is_err());
        let short = ErrorWeights {
            w_gate: 0.5,
            w_dep: 0.3,
            w_read: 0.1,
        };
        assert!(short.validate().is_err());
    }

    #[test]
    fn scenario_validation() {
        assert!(scenario(1e-3, 1e-3, 1e-3).validate().is_ok());
        assert!(scenario(1.0, 0.0, 0.0).validate().is_err());
        assert!(scenario(-0.1, 0.0, 0.0).validate().is_err());
        let mut s = scenario(0.0, 0.0, 0.0);
        s.max_q_avail = 0;
        assert!(s.validate().is_err());
        s.max_q_avail = 5;
        s.q_orig = 0;
        assert!(s.validate().is_err());
    }
}
