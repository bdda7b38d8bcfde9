//! Database of QECC parameter records.
//!
//! A [`Registry`] holds one [`CodeSpec`] per code family. The built-in
//! registry carries the nine-code benchmark; additional codes can be loaded
//! from a JSON file with the same schema (see `data/registry.json`).

mod budget;
mod formula;
mod schema;

use std::collections::BTreeSet;
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use budget::MaxDistance;
pub use formula::{DistanceDomain, MonotoneError, OverheadFormula, Rational};

/// Current registry file schema version.
pub const SCHEMA_VERSION: u32 = 1;

const BUILTIN_JSON: &str = include_str!("../../data/registry.json");

/// Kind of physical error a workload is expected to face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorType {
    BitFlip,
    PhaseFlip,
    AllPauli,
}

impl FromStr for ErrorType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bit-flip" | "bitflip" | "x" => Ok(ErrorType::BitFlip),
            "phase-flip" | "phaseflip" | "z" => Ok(ErrorType::PhaseFlip),
            "all-pauli" | "allpauli" | "pauli" => Ok(ErrorType::AllPauli),
            other => Err(format!("unknown error type `{other}`")),
        }
    }
}

impl fmt::Display for ErrorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorType::BitFlip => "bit-flip",
            ErrorType::PhaseFlip => "phase-flip",
            ErrorType::AllPauli => "all-pauli",
        })
    }
}

/// Which errors a code is claimed to protect against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorProtection {
    /// Bit flips only; phase flips pass undetected.
    BitFlipOnly,
    /// Any single-qubit error.
    ArbitrarySingle,
    /// Detects two-qubit errors, corrects one.
    DetectTwoCorrectOne,
    /// General Pauli errors up to the code distance.
    AllPauli,
}

impl ErrorProtection {
    pub fn covers(self, err: ErrorType) -> bool {
        match self {
            ErrorProtection::BitFlipOnly => err == ErrorType::BitFlip,
            _ => true,
        }
    }
}

/// Mechanism for logical multi-qubit operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Transversal {
    None,
    Clifford,
    Teleportation,
    TpgLatticeSurgery,
    LatticeSurgery,
}

/// Qubit technology a code has been demonstrated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Technology {
    Superconducting,
    TrappedIon,
    Optical,
    Rydberg,
    Nmr,
    NvDiamond,
    IsingAnyons,
    /// Classical simulation. Every code is realizable in simulation, so this
    /// value never appears in a stored realization set.
    Simulation,
}

impl Technology {
    pub const ALL: [Technology; 8] = [
        Technology::Superconducting,
        Technology::TrappedIon,
        Technology::Optical,
        Technology::Rydberg,
        Technology::Nmr,
        Technology::NvDiamond,
        Technology::IsingAnyons,
        Technology::Simulation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Technology::Superconducting => "superconducting",
            Technology::TrappedIon => "trapped-ion",
            Technology::Optical => "optical",
            Technology::Rydberg => "rydberg",
            Technology::Nmr => "nmr",
            Technology::NvDiamond => "nv-diamond",
            Technology::IsingAnyons => "ising-anyons",
            Technology::Simulation => "simulation",
        }
    }
}

impl FromStr for Technology {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim_end_matches('.').to_ascii_lowercase();
        match lower.as_str() {
            "supercond" | "sc" => return Ok(Technology::Superconducting),
            "ion" | "trapped ion" => return Ok(Technology::TrappedIon),
            _ => {}
        }
        Technology::ALL
            .into_iter()
            .find(|t| t.name() == lower)
            .ok_or_else(|| format!("unknown qubit technology `{s}`"))
    }
}

impl fmt::Display for Technology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Implementation complexity rank, 1 (very low) to 6 (extremely high).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Complexity(pub u8);

impl Complexity {
    pub const VERY_LOW: Complexity = Complexity(1);
    pub const LOW: Complexity = Complexity(2);
    pub const MEDIUM: Complexity = Complexity(3);
    pub const HIGH: Complexity = Complexity(4);
    pub const VERY_HIGH: Complexity = Complexity(5);
    pub const EXTREMELY_HIGH: Complexity = Complexity(6);

    pub const LEVELS: u8 = 6;

    pub fn is_valid(self) -> bool {
        (1..=Self::LEVELS).contains(&self.0)
    }

    pub fn label(self) -> &'static str {
        match self.0 {
            1 => "very low",
            2 => "low",
            3 => "medium",
            4 => "high",
            5 => "very high",
            6 => "extremely high",
            _ => "invalid",
        }
    }
}

/// One code family's benchmark record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeSpec {
    pub id: String,
    pub display_name: String,
    pub overhead: OverheadFormula,
    #[serde(rename = "distance")]
    pub distance_domain: DistanceDomain,
    /// Logical qubits per code block.
    #[serde(rename = "k")]
    pub logical_qubits_per_block: u64,
    pub threshold: f64,
    pub protection: ErrorProtection,
    pub decoders: Vec<String>,
    pub transversal: Transversal,
    pub scalable: bool,
    pub realizations: BTreeSet<Technology>,
    pub complexity: Complexity,
}

impl CodeSpec {
    /// Whether the code runs on `tech`. Simulation is always supported.
    pub fn realized_on(&self, tech: Technology) -> bool {
        tech == Technology::Simulation || self.realizations.contains(&tech)
    }

    /// Number of hardware platforms, excluding the implicit simulation entry.
    pub fn hardware_realizations(&self) -> usize {
        self.realizations
            .iter()
            .filter(|&&t| t != Technology::Simulation)
            .count()
    }

    pub fn decoder_count(&self) -> usize {
        self.decoders.len()
    }
}

/// A single failed invariant of a [`CodeSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// Result of [`validate_code`]; empty when the record is well formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub code: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, field: &'static str, message: impl Into<String>) {
        self.violations.push(Violation {
            field,
            message: message.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks every [`CodeSpec`] invariant and lists the failures.
pub fn validate_code(spec: &CodeSpec) -> ValidationReport {
    let mut report = ValidationReport {
        code: spec.id.clone(),
        violations: Vec::new(),
    };
    let id_ok = !spec.id.is_empty()
        && spec
            .id
            .chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-');
    if !id_ok {
        report.push("id", "must be a non-empty lowercase name ([a-z0-9-])");
    }
    if spec.display_name.trim().is_empty() {
        report.push("display_name", "must not be empty");
    }
    if spec.overhead.den == 0 {
        report.push("overhead", "denominator must be >= 1");
    }
    if spec.overhead.degree().is_none() {
        report.push("overhead", "at least one numerator coefficient must be nonzero");
    }
    let min_d = spec.distance_domain.min_distance();
    if min_d < 2 {
        report.push("distance", "distance must be >= 2");
    }
    if spec.overhead.den != 0 && spec.overhead.degree().is_some() && min_d >= 2 {
        if let Err(e) = spec.overhead.certify_monotone_from(min_d) {
            report.push("overhead", e.to_string());
        }
        if matches!(spec.distance_domain, DistanceDomain::AnyInteger { .. }) && spec.overhead.is_constant() {
            report.push("overhead", "any-distance codes need an overhead that grows with d");
        }
    }
    if spec.logical_qubits_per_block < 1 {
        report.push("k", "logical_qubits_per_block ≥ 1");
    }
    if !(spec.threshold > 0.0 && spec.threshold < 1.0) {
        report.push("threshold", "threshold out of (0,1)");
    }
    if spec.realizations.contains(&Technology::Simulation) {
        report.push("realizations", "\"simulation\" is implicit and must not be listed");
    }
    if !spec.complexity.is_valid() {
        report.push("complexity", "complexity rank must be in 1..=6");
    }
    if spec.decoders.iter().any(|d| d.trim().is_empty()) {
        report.push("decoders", "decoder names must not be empty");
    }
    report
}

#[derive(Debug, thiserror::Error)]
pub enum RegistryError {
    #[error("malformed registry JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("could not read registry: {0}")]
    Io(#[from] std::io::Error),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    SchemaVersion(u64),
    #[error("{location}: field `{field}`: {message}")]
    Field {
        location: String,
        field: String,
        message: String,
    },
    #[error("duplicate code id `{0}`")]
    DuplicateId(String),
    #[error("code `{}` is invalid: {report}", report.code)]
    Invalid { report: ValidationReport },
    #[error("unknown code `{0}`")]
    UnknownCode(String),
    #[error("distance {d} is not admissible for `{code}` ({domain})")]
    InadmissibleDistance {
        code: String,
        d: u64,
        domain: DistanceDomain,
    },
    #[error("qubit count for `{code}` at d = {d} overflows")]
    Overflow { code: String, d: u64 },
}

/// Where to load a registry from.
pub enum RegistrySource<R> {
    Builtin,
    Reader(R),
}

/// Ordered, validated collection of code records.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Registry {
    schema_version: u32,
    codes: Vec<CodeSpec>,
}

impl Registry {
    /// Builds a registry from records, checking id uniqueness and each
    /// record's invariants.
    pub fn new(codes: Vec<CodeSpec>) -> Result<Self, RegistryError> {
        let mut seen = BTreeSet::new();
        for spec in &codes {
            if !seen.insert(spec.id.as_str()) {
                return Err(RegistryError::DuplicateId(spec.id.clone()));
            }
            let report = validate_code(spec);
            if !report.is_empty() {
                return Err(RegistryError::Invalid { report });
            }
        }
        Ok(Self {
            schema_version: SCHEMA_VERSION,
            codes,
        })
    }

    /// The nine-code benchmark registry.
    pub fn builtin() -> Self {
        Self::from_json_str(BUILTIN_JSON).expect("built-in registry is valid")
    }

    pub fn builtin_json() -> &'static str {
        BUILTIN_JSON
    }

    pub fn load<R: Read>(source: RegistrySource<R>) -> Result<Self, RegistryError> {
        match source {
            RegistrySource::Builtin => Ok(Self::builtin()),
            RegistrySource::Reader(mut r) => {
                let mut text = String::new();
                r.read_to_string(&mut text)?;
                Self::from_json_str(&text)
            }
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, RegistryError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let codes = schema::parse_registry(&value)?;
        Self::new(codes)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("registry serializes")
    }

    pub fn schema_version(&self) -> u32 {
        self.schema_version
    }

    pub fn codes(&self) -> &[CodeSpec] {
        &self.codes
    }

    pub fn iter(&self) -> impl Iterator<Item = &CodeSpec> {
        self.codes.iter()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CodeSpec> {
        self.codes.iter().find(|c| c.id == id)
    }

    pub fn require(&self, id: &str) -> Result<&CodeSpec, RegistryError> {
        self.get(id)
            .ok_or_else(|| RegistryError::UnknownCode(id.to_string()))
    }
}

/// Exact overhead of one block of `code` at distance `d`.
pub fn overhead(code: &CodeSpec, d: u64) -> Result<Rational, RegistryError> {
    check_admissible(code, d)?;
    code.overhead.evaluate(d).ok_or_else(|| RegistryError::Overflow {
        code: code.id.clone(),
        d,
    })
}

/// Physical qubits for `num_logical` logical qubits at distance `d`:
/// `ceil(num_logical / k) * ceil(overhead(d))`.
pub fn physical_qubits(code: &CodeSpec, d: u64, num_logical: u64) -> Result<u64, RegistryError> {
    check_admissible(code, d)?;
    budget::physical_qubits_unchecked(code, d, num_logical).ok_or_else(|| RegistryError::Overflow {
        code: code.id.clone(),
        d,
    })
}

/// Largest distance that fits `budget` physical qubits.
pub fn max_distance(code: &CodeSpec, budget: u64, num_logical: u64) -> MaxDistance {
    budget::max_distance(code, budget, num_logical)
}

fn check_admissible(code: &CodeSpec, d: u64) -> Result<(), RegistryError> {
    if code.distance_domain.admits(d) {
        Ok(())
    } else {
        Err(RegistryError::InadmissibleDistance {
            code: code.id.clone(),
            d,
            domain: code.distance_domain,
        })
    }
}
