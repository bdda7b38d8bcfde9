use serde::{Serialize, Serializer};

use super::{CodeSpec, DistanceDomain};

/// Outcome of searching for the largest distance under a qubit budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxDistance {
    Achievable(u64),
    /// Fixed-distance code that fits the budget; there is no distance to tune.
    FixedNa,
    Infeasible,
}

impl MaxDistance {
    pub fn distance(self) -> Option<u64> {
        match self {
            MaxDistance::Achievable(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_feasible(self) -> bool {
        !matches!(self, MaxDistance::Infeasible)
    }
}

impl std::fmt::Display for MaxDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MaxDistance::Achievable(d) => write!(f, "{d}"),
            MaxDistance::FixedNa => f.write_str("NA"),
            MaxDistance::Infeasible => f.write_str("infeasible"),
        }
    }
}

impl Serialize for MaxDistance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MaxDistance::Achievable(d) => s.serialize_u64(*d),
            MaxDistance::FixedNa => s.serialize_str("NA"),
            MaxDistance::Infeasible => s.serialize_str("infeasible"),
        }
    }
}

/// Qubit count without the domain check; `None` on overflow.
pub(super) fn physical_qubits_unchecked(code: &CodeSpec, d: u64, num_logical: u64) -> Option<u64> {
    let blocks = num_logical.div_ceil(code.logical_qubits_per_block);
    let per_block = code.overhead.evaluate_ceil(d)?;
    let total = per_block.checked_mul(u128::from(blocks))?;
    u64::try_from(total).ok()
}

fn fits(code: &CodeSpec, d: u64, num_logical: u64, budget: u64) -> bool {
    physical_qubits_unchecked(code, d, num_logical).is_some_and(|q| q <= budget)
}

pub(super) fn max_distance(code: &CodeSpec, budget: u64, num_logical: u64) -> MaxDistance {
    match code.distance_domain {
        DistanceDomain::Fixed { d } => {
            if fits(code, d, num_logical, budget) {
                MaxDistance::FixedNa
            } else {
                MaxDistance::Infeasible
            }
        }
        DistanceDomain::AnyInteger { min_d } => {
            if !fits(code, min_d, num_logical, budget) {
                return MaxDistance::Infeasible;
            }
            // Gallop until the budget is exceeded, then bisect; `lo` always
            // fits and `hi` never does. Overflow counts as not fitting.
            let mut lo = min_d;
            let mut step = 1u64;
            let mut hi = loop {
                let probe = lo.saturating_add(step);
                if probe == lo {
                    return MaxDistance::Achievable(lo);
                }
                if !fits(code, probe, num_logical, budget) {
                    break probe;
                }
                lo = probe;
                step = step.saturating_mul(2);
            };
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if fits(code, mid, num_logical, budget) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            MaxDistance::Achievable(lo)
        }
    }
}
