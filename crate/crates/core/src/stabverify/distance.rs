use serde::Serialize;

use super::pauli::Letter;
use super::{PauliOperator, StabilizerCode, VerifyError};

/// Default ceiling on the number of candidate operators enumerated.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Which error letters the enumeration may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Restriction {
    All,
    XOnly,
    ZOnly,
}

impl Restriction {
    fn letters(self) -> &'static [Letter] {
        match self {
            Restriction::All => &[Letter::X, Letter::Y, Letter::Z],
            Restriction::XOnly => &[Letter::X],
            Restriction::ZOnly => &[Letter::Z],
        }
    }
}

impl std::str::FromStr for Restriction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Restriction::All),
            "x" | "x-only" | "xonly" => Ok(Restriction::XOnly),
            "z" | "z-only" | "zonly" => Ok(Restriction::ZOnly),
            other => Err(format!("unknown restriction `{other}` (all, x, z)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceResult {
    Found(usize),
    GreaterThan(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub result: DistanceResult,
    /// First undetectable logical operator in enumeration order.
    pub witness: Option<PauliOperator>,
    /// Candidate operators examined.
    pub examined: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectabilityReport {
    pub t: usize,
    pub correctable: bool,
    pub witness: Option<PauliOperator>,
    pub examined: u64,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `sum_{w=1..=w_max} C(n, w) * a^w`, saturating.
pub fn enumeration_size(n: usize, w_max: usize, restrict: Restriction) -> u64 {
    let a = restrict.letters().len() as u64;
    (1..=w_max.min(n) as u64).fold(0u64, |acc, w| {
        let per = binomial(n as u64, w).saturating_mul(a.saturating_pow(w as u32));
        acc.saturating_add(per)
    })
}

/// Next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest weight of a nontrivial undetectable operator, searched up to
/// `w_max` in deterministic order: by weight, then support in lexicographic
/// order, then letters in X < Y < Z order from the lowest qubit.
pub fn min_distance(
    code: &StabilizerCode,
    w_max: usize,
    restrict: Restriction,
    cap: u64,
) -> Result<DistanceReport, VerifyError> {
    if w_max == 0 {
        return Err(VerifyError::InvalidArgument("w_max must be >= 1".into()));
    }
    let n = code.num_qubits();
    let required = enumeration_size(n, w_max, restrict);
    if required > cap {
        return Err(VerifyError::ResourceLimit { required, cap });
    }
    let letters = restrict.letters();
    let mut examined = 0u64;
    for w in 1..=w_max.min(n) {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            // Odometer over letter choices; the last support qubit varies fastest.
            let mut choice = vec![0usize; w];
            'letters: loop {
                let mut op = PauliOperator::identity(n);
                for (&q, &c) in support.iter().zip(&choice) {
                    op.set(q, letters[c]);
                }
                examined += 1;
                if code.commutes_with_all(&op) && !code.in_group_unchecked(&op) {
                    return Ok(DistanceReport {
                        result: DistanceResult::Found(w),
                        witness: Some(op),
                        examined,
                    });
                }
                for pos in (0..w).rev() {
                    choice[pos] += 1;
                    if choice[pos] < letters.len() {
                        continue 'letters;
                    }
                    choice[pos] = 0;
                }
                break;
            }
            if !next_combination(&mut support, n) {
                break;
            }
        }
    }
    Ok(DistanceReport {
        result: DistanceResult::GreaterThan(w_max),
        witness: None,
        examined,
    })
}

/// Whether every error of weight `<= t` (of the restricted type) is
/// correctable, i.e. the distance is at least `2t + 1`.
pub fn check_correctability(
    code: &StabilizerCode,
    t: usize,
    restrict: Restriction,
    cap: u64,
) -> Result<CorrectabilityReport, VerifyError> {
    if t == 0 {
        return Ok(CorrectabilityReport {
            t,
            correctable: true,
            witness: None,
            examined: 0,
        });
    }
    let report = min_distance(code, 2 * t, restrict, cap)?;
    Ok(CorrectabilityReport {
        t,
        correctable: matches!(report.result, DistanceResult::GreaterThan(_)),
        witness: report.witness,
        examined: report.examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(gens: &[&str]) -> StabilizerCode {
        StabilizerCode::from_strings("test", gens).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 0), 1);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumeration_size(9, 3, Restriction::All), 27 + 36 * 9 + 84 * 27);
        assert_eq!(enumeration_size(3, 3, Restriction::XOnly), 7);
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }

    #[test]
    fn enumerates_every_candidate_once() {
        // X-type logicals of the repetition code start at weight 3.
        let rep = code(&["ZZI", "IZZ"]);
        let r = min_distance(&rep, 2, Restriction::XOnly, DEFAULT_CAP).unwrap();
        assert_eq!(r.result, DistanceResult::GreaterThan(2));
        assert_eq!(r.examined, 3 + 3);
        let r = min_distance(&rep, 3, Restriction::XOnly, DEFAULT_CAP).unwrap();
        assert_eq!(r.result, DistanceResult::Found(3));
        assert_eq!(r.witness.unwrap().to_string(), "XXX");
    }

    #[test]
    fn repetition_has_weight_one_phase_logical() {
        let rep = code(&["ZZI", "IZZ"]);
        let r = min_distance(&rep, 1, Restriction::All, DEFAULT_CAP).unwrap();
        assert_eq!(r.result, DistanceResult::Found(1));
        assert_eq!(r.witness.unwrap().to_string(), "ZII");
        let c = check_correctability(&rep, 1, Restriction::All, DEFAULT_CAP).unwrap();
        assert!(!c.correctable);
        assert_eq!(c.witness.unwrap().to_string(), "ZII");
        assert!(check_correctability(&rep, 1, Restriction::XOnly, DEFAULT_CAP).unwrap().correctable);
        assert!(check_correctability(&rep, 0, Restriction::All, DEFAULT_CAP).unwrap().correctable);
    }

    #[test]
    fn cap_is_enforced() {
        let rep = code(&["ZZI", "IZZ"]);
        let err = min_distance(&rep, 3, Restriction::All, 10).unwrap_err();
        assert!(matches!(err, VerifyError::ResourceLimit { required: 63, cap: 10 }));
        assert!(min_distance(&rep, 0, Restriction::All, 10).is_err());
    }
}
