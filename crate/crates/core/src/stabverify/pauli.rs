use std::fmt;
use std::str::FromStr;

use super::VerifyError;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// Phase-free Pauli operator in binary-symplectic form.
///
/// Qubit `i` carries X when bit `i` of `x` is set, Z when bit `i` of `z` is
/// set, and Y when both are. Products are bitwise XOR.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            x: vec![0; words_for(n)],
            z: vec![0; words_for(n)],
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut p = Self::identity(letters.len());
        for (i, &l) in letters.iter().enumerate() {
            p.set(i, l);
        }
        p
    }

    /// `letter` on `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: Letter) -> Self {
        let mut p = Self::identity(n);
        p.set(qubit, letter);
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> Letter {
        assert!(i < self.n, "qubit {i} out of range for {} qubits", self.n);
        let (w, b) = (i / WORD, i % WORD);
        Letter::from_bits(self.x[w] >> b & 1 == 1, self.z[w] >> b & 1 == 1)
    }

    pub fn set(&mut self, i: usize, letter: Letter) {
        assert!(i < self.n, "qubit {i} out of range for {} qubits", self.n);
        let (w, b) = (i / WORD, i % WORD);
        let (xb, zb) = letter.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | (u64::from(xb) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | (u64::from(zb) << b);
    }

    pub fn x_bit(&self, i: usize) -> bool {
        matches!(self.get(i), Letter::X | Letter::Y)
    }

    pub fn z_bit(&self, i: usize) -> bool {
        matches!(self.get(i), Letter::Z | Letter::Y)
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    /// True when the operator has no Z component (only I and X letters).
    pub fn is_x_type(&self) -> bool {
        self.z.iter().all(|&w| w == 0)
    }

    pub fn is_z_type(&self) -> bool {
        self.x.iter().all(|&w| w == 0)
    }

    fn check_size(&self, other: &Self) -> Result<(), VerifyError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(VerifyError::SizeMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// Symplectic product parity without the size check.
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        let mut parity = 0u32;
        for i in 0..self.x.len() {
            parity ^= ((self.x[i] & other.z[i]) ^ (self.z[i] & other.x[i])).count_ones();
        }
        parity & 1 == 1
    }

    /// Whether the two operators commute: `x·z' + z·x' = 0 (mod 2)`.
    pub fn commutes(&self, other: &Self) -> Result<bool, VerifyError> {
        self.check_size(other)?;
        Ok(!self.anticommutes_unchecked(other))
    }

    /// Phase-free product.
    pub fn product(&self, other: &Self) -> Result<Self, VerifyError> {
        self.check_size(other)?;
        Ok(Self {
            n: self.n,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// The `(x | z)` vector as packed words: x words, then z words.
    pub(crate) fn symplectic_words(&self) -> Vec<u64> {
        self.x.iter().chain(&self.z).copied().collect()
    }
}

impl FromStr for PauliOperator {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(VerifyError::Parse("empty Pauli string".into()));
        }
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'I' | 'i' | '_' => Ok(Letter::I),
                'X' | 'x' => Ok(Letter::X),
                'Y' | 'y' => Ok(Letter::Y),
                'Z' | 'z' => Ok(Letter::Z),
                other => Err(VerifyError::Parse(format!(
                    "illegal character `{other}` at position {i}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_letters(&letters))
    }
}

/// Parses a Pauli string over `{I, X, Y, Z}`.
pub fn parse_pauli(text: &str) -> Result<PauliOperator, VerifyError> {
    text.parse()
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.get(i).as_char())?;
        }
        Ok(())
    }
}
