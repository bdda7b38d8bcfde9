//! Benchmark figures as plain data: overhead growth, thresholds, radar-chart
//! positions, and logical-error-rate curves.
//!
//! Nothing here renders; every dataset can be written as CSV or JSON through
//! [`export`].

mod export;
mod ler;
mod radar;

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::registry::{self, DistanceDomain, Registry, RegistryError};

pub use export::{export, Dataset, Format};
pub use ler::{
    ler_curves, log_grid, logical_error_rate, required_distance, required_distance_curves, LerModel,
    RequiredDistance, DEFAULT_PREFACTOR,
};
pub use radar::{radar_data, RadarAxes, RadarAxis, RadarPoint, AXIS_NAMES};

/// Error rate of an uncorrected machine, drawn as the reference line on the
/// threshold chart.
pub const REFERENCE_ERROR_RATE: f64 = 1e-3;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error("code `{code}` has no category on the {axis} axis (value {value})")]
    Unmappable { code: String, axis: &'static str, value: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A labelled curve; `x` is strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSeries {
    pub label: String,
    pub points: Vec<Point>,
}

impl CurveSeries {
    pub fn new(label: impl Into<String>, points: Vec<Point>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdEntry {
    pub code: String,
    pub threshold: f64,
}

/// One threshold per code, in registry order, plus the reference line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdSeries {
    pub entries: Vec<ThresholdEntry>,
    pub reference: f64,
}

/// `ceil(overhead(code, d))` for each requested code over `d_range`.
///
/// Fixed-distance codes contribute a single point at their own distance. An
/// empty `ids` slice means every code in the registry.
pub fn overhead_series(
    registry: &Registry,
    ids: &[&str],
    d_range: RangeInclusive<u64>,
) -> Result<Vec<CurveSeries>, BenchError> {
    if d_range.is_empty() {
        return Err(BenchError::InvalidArgument(format!(
            "empty distance range {}..={}",
            d_range.start(),
            d_range.end()
        )));
    }
    let codes = if ids.is_empty() {
        registry.iter().collect()
    } else {
        ids.iter()
            .map(|id| registry.require(id))
            .collect::<Result<Vec<_>, _>>()?
    };
    codes
        .into_iter()
        .map(|code| {
            let ds = match code.distance_domain {
                DistanceDomain::Fixed { d } => d..=d,
                DistanceDomain::AnyInteger { .. } => d_range.clone(),
            };
            let points = ds
                .map(|d| {
                    let q = registry::overhead(code, d)?;
                    let ceil = q.ceil().to_integer();
                    Ok(Point {
                        x: d as f64,
                        y: ceil as f64,
                    })
                })
                .collect::<Result<Vec<_>, BenchError>>()?;
            Ok(CurveSeries::new(code.id.clone(), points))
        })
        .collect()
}

pub fn threshold_series(registry: &Registry) -> ThresholdSeries {
    ThresholdSeries {
        entries: registry
            .iter()
            .map(|c| ThresholdEntry {
                code: c.id.clone(),
                threshold: c.threshold,
            })
            .collect(),
        reference: REFERENCE_ERROR_RATE,
    }
}
