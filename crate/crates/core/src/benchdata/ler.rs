use serde::Serialize;

use super::{BenchError, CurveSeries, Point};

pub const DEFAULT_PREFACTOR: f64 = 0.1;

/// Relative slack when comparing a logical error rate against its target.
const TARGET_RTOL: f64 = 1e-9;

/// Threshold scaling ansatz `p_L = A * (p / p_th)^((d + 1) / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LerModel {
    pub a: f64,
    pub p_th: f64,
}

impl LerModel {
    pub fn new(a: f64, p_th: f64) -> Result<Self, BenchError> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(BenchError::InvalidArgument(format!("prefactor must be positive, got {a}")));
        }
        if !(p_th > 0.0 && p_th < 1.0) {
            return Err(BenchError::InvalidArgument(format!("p_th must lie in (0, 1), got {p_th}")));
        }
        Ok(Self { a, p_th })
    }

    pub fn with_threshold(p_th: f64) -> Result<Self, BenchError> {
        Self::new(DEFAULT_PREFACTOR, p_th)
    }
}

/// Logical error rate at physical rate `p` and distance `d`, capped at 1.
pub fn logical_error_rate(model: &LerModel, p: f64, d: u64) -> f64 {
    let exponent = d.div_ceil(2) as i32;
    (model.a * (p / model.p_th).powi(exponent)).min(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RequiredDistance {
    Found(u64),
    NotAchievable,
}

/// Smallest odd `d >= 3` whose logical error rate meets `target`.
pub fn required_distance(model: &LerModel, p: f64, target: f64, d_max: u64) -> Result<RequiredDistance, BenchError> {
    if !(target > 0.0 && target < 1.0) {
        return Err(BenchError::InvalidArgument(format!("target must lie in (0, 1), got {target}")));
    }
    if d_max < 3 {
        return Err(BenchError::InvalidArgument(format!("d_max must be >= 3, got {d_max}")));
    }
    if p.is_nan() || p <= 0.0 {
        return Err(BenchError::InvalidArgument(format!("p must be positive, got {p}")));
    }
    if p >= model.p_th {
        return Ok(RequiredDistance::NotAchievable);
    }
    let bound = target * (1.0 + TARGET_RTOL);
    Ok((3..=d_max)
        .step_by(2)
        .find(|&d| logical_error_rate(model, p, d) <= bound)
        .map_or(RequiredDistance::NotAchievable, RequiredDistance::Found))
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, BenchError> {
    if !(lo > 0.0 && hi > lo) || n < 2 {
        return Err(BenchError::InvalidArgument(format!(
            "log grid needs 0 < lo < hi and n >= 2, got {lo}, {hi}, {n}"
        )));
    }
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| (a + step * i as f64).exp()).collect();
    grid[0] = lo;
    grid[n - 1] = hi;
    Ok(grid)
}

/// One `p_L(p)` curve per distance, labelled `d=<d>`.
pub fn ler_curves(model: &LerModel, distances: &[u64], ps: &[f64]) -> Vec<CurveSeries> {
    distances
        .iter()
        .map(|&d| {
            let points = ps
                .iter()
                .map(|&p| Point {
                    x: p,
                    y: logical_error_rate(model, p, d),
                })
                .collect();
            CurveSeries::new(format!("d={d}"), points)
        })
        .collect()
}

/// One required-distance curve per target, labelled `target=<t>`. Rates with
/// no achievable distance are left out.
pub fn required_distance_curves(
    model: &LerModel,
    targets: &[f64],
    ps: &[f64],
    d_max: u64,
) -> Result<Vec<CurveSeries>, BenchError> {
    targets
        .iter()
        .map(|&t| {
            let mut points = Vec::new();
            for &p in ps {
                if let RequiredDistance::Found(d) = required_distance(model, p, t, d_max)? {
                    points.push(Point { x: p, y: d as f64 });
                }
            }
            Ok(CurveSeries::new(format!("target={t:e}"), points))
        })
        .collect()
}
