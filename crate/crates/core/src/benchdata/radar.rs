use serde::Serialize;

use super::BenchError;
use crate::registry::{CodeSpec, ErrorProtection, Registry, Transversal};

/// Axis names, in chart order.
pub const AXIS_NAMES: [&str; 8] = [
    "qubit-overhead",
    "error-threshold",
    "error-protection",
    "decoding",
    "transversal-gates",
    "scalability",
    "realization",
    "complexity",
];

const OVERHEAD: &[&str] = &["7", "9", "d", "d^2", "d^3"];
const THRESHOLD: &[f64] = &[1.9e-3, 0.01, 0.018, 0.045, 0.2, 0.3];
const PROTECTION: &[&str] = &[
    "bit-flip",
    "two-qubit errors",
    "detect two-qubit errors or correct one",
    "all Pauli errors",
];
const DECODING: &[(usize, &str)] = &[(0, "classical"), (1, "1"), (2, "2"), (5, "5"), (10, "10+")];
const TRANSVERSAL: &[&str] = &["none", "Clifford", "teleportation", "lattice surgery"];
const SCALABILITY: &[&str] = &["no", "yes"];
const REALIZATION: &[(usize, &str)] = &[(0, "none"), (1, "1"), (2, "2"), (3, "3"), (6, "6")];
const COMPLEXITY: &[&str] = &["very low", "low", "medium", "high", "very high", "extremely high"];

/// Thresholds more than this factor outside the category span are rejected.
const THRESHOLD_SLACK: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadarPoint {
    pub code: String,
    pub category: String,
    pub index: usize,
    /// `index / (categories - 1)`.
    pub position: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadarAxis {
    pub name: String,
    pub categories: Vec<String>,
    pub codes: Vec<RadarPoint>,
}

impl RadarAxis {
    pub fn point(&self, code: &str) -> Option<&RadarPoint> {
        self.codes.iter().find(|p| p.code == code)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadarAxes {
    pub axes: Vec<RadarAxis>,
}

impl RadarAxes {
    pub fn axis(&self, name: &str) -> Option<&RadarAxis> {
        self.axes.iter().find(|a| a.name == name)
    }

    pub fn position(&self, axis: &str, code: &str) -> Option<f64> {
        self.axis(axis)?.point(code).map(|p| p.position)
    }
}

fn unmappable(code: &CodeSpec, axis: &'static str, value: impl ToString) -> BenchError {
    BenchError::Unmappable {
        code: code.id.clone(),
        axis,
        value: value.to_string(),
    }
}

fn overhead_index(code: &CodeSpec) -> Result<usize, BenchError> {
    let f = &code.overhead;
    match f.degree() {
        Some(0) => match f.evaluate(0) {
            Some(v) if v == 7.into() => Ok(0),
            Some(v) if v == 9.into() => Ok(1),
            _ => Err(unmappable(code, AXIS_NAMES[0], f)),
        },
        Some(deg @ 1..=3) => Ok(deg + 1),
        _ => Err(unmappable(code, AXIS_NAMES[0], f)),
    }
}

/// Nearest category on a log scale.
fn threshold_index(code: &CodeSpec) -> Result<usize, BenchError> {
    let t = code.threshold;
    let lo = THRESHOLD[0] / THRESHOLD_SLACK;
    let hi = THRESHOLD[THRESHOLD.len() - 1] * THRESHOLD_SLACK;
    if !(t > lo && t < hi) {
        return Err(unmappable(code, AXIS_NAMES[1], t));
    }
    let dist = |c: f64| (t.log10() - c.log10()).abs();
    let (ix, _) = THRESHOLD
        .iter()
        .enumerate()
        .min_by(|a, b| dist(*a.1).total_cmp(&dist(*b.1)))
        .expect("non-empty");
    Ok(ix)
}

fn protection_index(p: ErrorProtection) -> usize {
    match p {
        ErrorProtection::BitFlipOnly => 0,
        ErrorProtection::ArbitrarySingle => 1,
        ErrorProtection::DetectTwoCorrectOne => 2,
        ErrorProtection::AllPauli => 3,
    }
}

fn transversal_index(t: Transversal) -> usize {
    match t {
        Transversal::None => 0,
        Transversal::Clifford => 1,
        Transversal::Teleportation => 2,
        Transversal::TpgLatticeSurgery | Transversal::LatticeSurgery => 3,
    }
}

/// Largest bucket whose lower bound is `<= count`.
fn bucket(bounds: &[(usize, &str)], count: usize) -> usize {
    bounds.iter().rposition(|&(b, _)| b <= count).unwrap_or(0)
}

fn complexity_index(code: &CodeSpec) -> Result<usize, BenchError> {
    if code.complexity.is_valid() {
        Ok(usize::from(code.complexity.0) - 1)
    } else {
        Err(unmappable(code, AXIS_NAMES[7], code.complexity.0))
    }
}

fn axis(
    name: &str,
    categories: Vec<String>,
    registry: &Registry,
    index: impl Fn(&CodeSpec) -> Result<usize, BenchError>,
) -> Result<RadarAxis, BenchError> {
    let top = (categories.len() - 1) as f64;
    let codes = registry
        .iter()
        .map(|code| {
            let ix = index(code)?;
            Ok(RadarPoint {
                code: code.id.clone(),
                category: categories[ix].clone(),
                index: ix,
                position: ix as f64 / top,
            })
        })
        .collect::<Result<_, BenchError>>()?;
    Ok(RadarAxis {
        name: name.to_string(),
        categories,
        codes,
    })
}

fn labels(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn bucket_labels(list: &[(usize, &str)]) -> Vec<String> {
    list.iter().map(|(_, s)| s.to_string()).collect()
}

/// Places every code on every radar axis.
pub fn radar_data(registry: &Registry) -> Result<RadarAxes, BenchError> {
    let thresholds = THRESHOLD.iter().map(|t| t.to_string()).collect();
    let axes = vec![
        axis(AXIS_NAMES[0], labels(OVERHEAD), registry, overhead_index)?,
        axis(AXIS_NAMES[1], thresholds, registry, threshold_index)?,
        axis(AXIS_NAMES[2], labels(PROTECTION), registry, |c| Ok(protection_index(c.protection)))?,
        axis(AXIS_NAMES[3], bucket_labels(DECODING), registry, |c| {
            Ok(bucket(DECODING, c.decoder_count()))
        })?,
        axis(AXIS_NAMES[4], labels(TRANSVERSAL), registry, |c| Ok(transversal_index(c.transversal)))?,
        axis(AXIS_NAMES[5], labels(SCALABILITY), registry, |c| Ok(usize::from(c.scalable)))?,
        axis(AXIS_NAMES[6], bucket_labels(REALIZATION), registry, |c| {
            Ok(bucket(REALIZATION, c.hardware_realizations()))
        })?,
        axis(AXIS_NAMES[7], labels(COMPLEXITY), registry, complexity_index)?,
    ];
    Ok(RadarAxes { axes })
}
