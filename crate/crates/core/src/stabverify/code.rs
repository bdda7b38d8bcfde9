use std::fmt;

use serde::{Deserialize, Serialize};

use super::{PauliOperator, VerifyError};

/// Row-reduced GF(2) basis over packed bit vectors.
#[derive(Debug, Clone, Default)]
struct Gf2Basis {
    /// `(pivot bit, row)` with each pivot cleared from every other row.
    rows: Vec<(usize, Vec<u64>)>,
}

fn bit(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Gf2Basis {
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (pivot, row) in &self.rows {
            if bit(&v, *pivot) {
                xor_into(&mut v, row);
            }
        }
        v
    }

    /// Adds `v` to the span; `false` if it was already in it.
    fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = first_set_bit(&v) else {
            return false;
        };
        for (_, row) in &mut self.rows {
            if bit(row, pivot) {
                xor_into(row, &v);
            }
        }
        self.rows.push((pivot, v));
        true
    }

    fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&w| w == 0)
    }
}

fn first_set_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Stabilizer code given by independent, pairwise commuting generators.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    name: String,
    n: usize,
    generators: Vec<PauliOperator>,
    basis: Gf2Basis,
}

impl StabilizerCode {
    pub fn new(name: impl Into<String>, generators: Vec<PauliOperator>) -> Result<Self, VerifyError> {
        let name = name.into();
        let Some(first) = generators.first() else {
            return Err(VerifyError::InvalidCode(format!("`{name}` has no generators")));
        };
        let n = first.num_qubits();
        for g in &generators {
            if g.num_qubits() != n {
                return Err(VerifyError::SizeMismatch {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a.anticommutes_unchecked(b) {
                    return Err(VerifyError::InvalidCode(format!(
                        "`{name}`: generators {a} and {b} anticommute"
                    )));
                }
            }
        }
        let mut basis = Gf2Basis::default();
        for g in &generators {
            if !basis.insert(g.symplectic_words()) {
                return Err(VerifyError::InvalidCode(format!(
                    "`{name}`: generator {g} depends on the others"
                )));
            }
        }
        Ok(Self {
            name,
            n,
            generators,
            basis,
        })
    }

    /// Builds a code from Pauli strings.
    pub fn from_strings(name: impl Into<String>, generators: &[&str]) -> Result<Self, VerifyError> {
        let gens = generators
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<PauliOperator>, _>>()?;
        Self::new(name, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Number of logical qubits, `n - rank`.
    pub fn num_logical(&self) -> usize {
        self.n - self.generators.len()
    }

    fn check(&self, p: &PauliOperator) -> Result<(), VerifyError> {
        if p.num_qubits() == self.n {
            Ok(())
        } else {
            Err(VerifyError::SizeMismatch {
                expected: self.n,
                found: p.num_qubits(),
            })
        }
    }

    /// One bit per generator, set when the generator anticommutes with `error`.
    pub fn syndrome(&self, error: &PauliOperator) -> Result<Syndrome, VerifyError> {
        self.check(error)?;
        Ok(self.syndrome_unchecked(error))
    }

    pub(crate) fn syndrome_unchecked(&self, error: &PauliOperator) -> Syndrome {
        Syndrome(
            self.generators
                .iter()
                .map(|g| g.anticommutes_unchecked(error))
                .collect(),
        )
    }

    pub(crate) fn commutes_with_all(&self, p: &PauliOperator) -> bool {
        self.generators.iter().all(|g| !g.anticommutes_unchecked(p))
    }

    /// Whether `p` is, up to phase, a product of generators.
    pub fn in_stabilizer_group(&self, p: &PauliOperator) -> Result<bool, VerifyError> {
        self.check(p)?;
        Ok(self.in_group_unchecked(p))
    }

    pub(crate) fn in_group_unchecked(&self, p: &PauliOperator) -> bool {
        self.basis.contains(p.symplectic_words())
    }

    pub fn definition(&self) -> CodeDefinition {
        CodeDefinition {
            name: self.name.clone(),
            n: self.n,
            generators: self.generators.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Anticommutation pattern of an error against each generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(pub Vec<bool>);

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| !b)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn xor(&self, other: &Syndrome) -> Syndrome {
        Syndrome(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// On-disk form of a stabilizer code: `{ "name", "n", "generators": [...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDefinition {
    pub name: String,
    pub n: usize,
    pub generators: Vec<String>,
}

impl CodeDefinition {
    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(text).map_err(|e| VerifyError::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<StabilizerCode, VerifyError> {
        let gens = self
            .generators
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<PauliOperator>, _>>()?;
        if let Some(g) = gens.iter().find(|g| g.num_qubits() != self.n) {
            return Err(VerifyError::SizeMismatch {
                expected: self.n,
                found: g.num_qubits(),
            });
        }
        StabilizerCode::new(self.name.clone(), gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn repetition3() -> StabilizerCode {
        StabilizerCode::from_strings("repetition-3", &["ZZI", "IZZ"]).unwrap()
    }

    #[test]
    fn repetition_syndromes() {
        let code = repetition3();
        assert_eq!(code.syndrome(&p("IXI")).unwrap(), Syndrome(vec![true, true]));
        assert_eq!(code.syndrome(&p("XII")).unwrap(), Syndrome(vec![true, false]));
        assert!(code.syndrome(&p("III")).unwrap().is_zero());
        assert!(code.syndrome(&p("XXXX")).is_err());
    }

    #[test]
    fn group_membership() {
        let code = repetition3();
        assert!(code.in_stabilizer_group(&p("ZIZ")).unwrap());
        assert!(code.in_stabilizer_group(&p("III")).unwrap());
        assert!(!code.in_stabilizer_group(&p("ZII")).unwrap());
        assert!(!code.in_stabilizer_group(&p("XXX")).unwrap());
    }

    #[test]
    fn rejects_bad_generator_sets() {
        assert!(StabilizerCode::from_strings("bad", &["XI", "ZI"]).is_err());
        assert!(StabilizerCode::from_strings("dep", &["ZZI", "IZZ", "ZIZ"]).is_err());
        assert!(StabilizerCode::from_strings("size", &["ZZ", "ZZZ"]).is_err());
        assert!(StabilizerCode::new("none", vec![]).is_err());
    }

    #[test]
    fn definition_roundtrip() {
        let text = r#"{"name": "rep", "n": 3, "generators": ["ZZI", "IZZ"]}"#;
        let def = CodeDefinition::from_json(text).unwrap();
        let code = def.build().unwrap();
        assert_eq!(code.num_logical(), 1);
        assert_eq!(code.definition(), def);
        let wrong_n = CodeDefinition {
            n: 4,
            ..def
        };
        assert!(wrong_n.build().is_err());
    }
}
