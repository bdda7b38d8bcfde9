//! Brute-force checks of stabilizer-code protection claims.
//!
//! Operators live in the binary-symplectic representation with phases
//! dropped: syndromes, commutation, and stabilizer-group membership do not
//! depend on them. Distances are found by enumerating every operator up to a
//! weight bound, so only small codes are practical.

mod builtin;
mod code;
mod distance;
mod pauli;

use serde::Serialize;

pub use builtin::{builtin_code, builtin_codes, BUILTIN_NAMES};
pub use code::{CodeDefinition, StabilizerCode, Syndrome};
pub use distance::{
    check_correctability, enumeration_size, min_distance, CorrectabilityReport, DistanceReport, DistanceResult,
    Restriction, DEFAULT_CAP,
};
pub use pauli::{parse_pauli, Letter, PauliOperator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: expected {expected} qubits, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration needs {required} candidates, above the cap of {cap}")]
    ResourceLimit { required: u64, cap: u64 },
}

/// A protection claim to check against a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    /// Find the distance, searching up to `w_max`.
    Distance { w_max: usize },
    /// Every error of weight `<= t` is correctable.
    Correctable { t: usize },
}

/// Machine-readable outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub code: String,
    pub n: usize,
    pub claim: Claim,
    pub restrict: Restriction,
    pub result: String,
    pub distance: Option<usize>,
    pub correctable: Option<bool>,
    pub witness: Option<String>,
    pub examined: u64,
}

pub fn verify(
    code: &StabilizerCode,
    claim: Claim,
    restrict: Restriction,
    cap: u64,
) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport {
        code: code.name().to_string(),
        n: code.num_qubits(),
        claim,
        restrict,
        result: String::new(),
        distance: None,
        correctable: None,
        witness: None,
        examined: 0,
    };
    match claim {
        Claim::Distance { w_max } => {
            let r = min_distance(code, w_max, restrict, cap)?;
            report.examined = r.examined;
            report.witness = r.witness.map(|w| w.to_string());
            match r.result {
                DistanceResult::Found(d) => {
                    report.result = format!("distance = {d}");
                    report.distance = Some(d);
                }
                DistanceResult::GreaterThan(w) => report.result = format!("distance > {w}"),
            }
        }
        Claim::Correctable { t } => {
            let r = check_correctability(code, t, restrict, cap)?;
            report.examined = r.examined;
            report.witness = r.witness.map(|w| w.to_string());
            report.correctable = Some(r.correctable);
            report.result = if r.correctable {
                format!("correctable (t = {t})")
            } else {
                format!("not correctable (t = {t})")
            };
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn steane_distance_report() {
        let code = builtin_code("steane-7").unwrap();
        let r = verify(&code, Claim::Distance { w_max: 3 }, Restriction::All, DEFAULT_CAP).unwrap();
        assert_eq!(r.result, "distance = 3");
        assert_eq!(r.distance, Some(3));
        let w: PauliOperator = r.witness.unwrap().parse().unwrap();
        assert_eq!(w.weight(), 3);
        assert!(code.syndrome(&w).unwrap().is_zero());
        assert!(!code.in_stabilizer_group(&w).unwrap());
    }

    #[test]
    fn correctability_reports() {
        let steane = builtin_code("steane-7").unwrap();
        let r = verify(&steane, Claim::Correctable { t: 1 }, Restriction::All, DEFAULT_CAP).unwrap();
        assert_eq!(r.correctable, Some(true));
        assert!(r.witness.is_none());
        let rep = builtin_code("repetition-3").unwrap();
        let r = verify(&rep, Claim::Correctable { t: 1 }, Restriction::All, DEFAULT_CAP).unwrap();
        assert_eq!(r.correctable, Some(false));
        assert_eq!(r.witness.as_deref(), Some("ZII"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["claim"]["kind"], "correctable");
        assert_eq!(json["restrict"], "all");
    }

    #[test]
    fn distance_and_correctability_agree() {
        for code in builtin_codes() {
            let d = match min_distance(&code, 4, Restriction::All, DEFAULT_CAP).unwrap().result {
                DistanceResult::Found(d) => d,
                DistanceResult::GreaterThan(_) => usize::MAX,
            };
            for t in 0..=2 {
                let c = check_correctability(&code, t, Restriction::All, DEFAULT_CAP).unwrap();
                assert_eq!(c.correctable, d > 2 * t, "{} t={t}", code.name());
            }
        }
    }

    #[test]
    fn group_elements_have_zero_syndrome() {
        for code in builtin_codes() {
            let gens = code.generators();
            for mask in 0u32..(1 << gens.len()) {
                let mut p = PauliOperator::identity(code.num_qubits());
                for (i, g) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        p = p.product(g).unwrap();
                    }
                }
                assert!(code.syndrome(&p).unwrap().is_zero());
                assert!(code.in_stabilizer_group(&p).unwrap());
            }
        }
    }

    fn letters(n: usize) -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec(prop_oneof![Just(Letter::I), Just(Letter::X), Just(Letter::Y), Just(Letter::Z)], n)
    }

    fn code_and_pair() -> impl Strategy<Value = (usize, Vec<Letter>, Vec<Letter>)> {
        (0usize..BUILTIN_NAMES.len()).prop_flat_map(|ix| {
            let n = builtin_codes()[ix].num_qubits();
            (Just(ix), letters(n), letters(n))
        })
    }

    proptest! {
        #[test]
        fn syndrome_is_linear((ix, a, b) in code_and_pair()) {
            let code = &builtin_codes()[ix];
            let a = PauliOperator::from_letters(&a);
            let b = PauliOperator::from_letters(&b);
            let lhs = code.syndrome(&a.product(&b).unwrap()).unwrap();
            let rhs = code.syndrome(&a).unwrap().xor(&code.syndrome(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
