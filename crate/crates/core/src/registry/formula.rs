//! Overhead polynomials and distance domains.

use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Exact rational number used for overhead values.
pub type Rational = Ratio<i128>;

/// Largest integer span scanned when certifying that a formula is monotone.
const CERTIFY_SPAN: u64 = 1_000_000;

/// Physical-qubit cost of one code block as a polynomial in the distance `d`
/// divided by a positive integer.
///
/// `num[i]` is the coefficient of `d^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverheadFormula {
    pub num: Vec<i64>,
    pub den: u64,
}

impl OverheadFormula {
    pub fn new(num: Vec<i64>, den: u64) -> Self {
        Self { num, den }
    }

    pub fn constant(value: i64) -> Self {
        Self::new(vec![value], 1)
    }

    /// Degree of the numerator, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.iter().rposition(|&c| c != 0)
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.degree(), Some(0) | None)
    }

    /// Evaluates the numerator at `d` with Horner's rule. `None` on overflow.
    fn numerator_at(&self, d: i128) -> Option<i128> {
        eval_poly(&self.num_i128(), d)
    }

    fn num_i128(&self) -> Vec<i128> {
        self.num.iter().map(|&c| c as i128).collect()
    }

    /// Exact value at `d`, or `None` if the intermediate integers overflow.
    pub fn evaluate(&self, d: u64) -> Option<Rational> {
        if self.den == 0 {
            return None;
        }
        let n = self.numerator_at(d as i128)?;
        Some(Ratio::new(n, self.den as i128))
    }

    /// `ceil(evaluate(d))` as an unsigned integer.
    pub fn evaluate_ceil(&self, d: u64) -> Option<u128> {
        self.evaluate(d)?.ceil().to_integer().to_u128()
    }

    /// Checks that the formula is strictly positive and non-decreasing for
    /// every integer `d >= min_d`.
    ///
    /// Both `p` and its forward difference `p(d+1) - p(d)` have a positive
    /// leading coefficient, so beyond the Cauchy root bound their signs are
    /// fixed. Below that bound every integer point is checked exactly.
    pub fn certify_monotone_from(&self, min_d: u64) -> Result<(), MonotoneError> {
        let Some(deg) = self.degree() else {
            return Err(MonotoneError::Zero);
        };
        let p = self.num_i128()[..=deg].to_vec();
        if p[deg] < 0 {
            return Err(MonotoneError::NegativeLeading);
        }
        if deg == 0 {
            return Ok(());
        }
        let diff = forward_difference(&p).ok_or(MonotoneError::TooLarge)?;
        let bound = cauchy_bound(&p).max(cauchy_bound(&diff));
        let hi = bound.max(min_d);
        if hi - min_d > CERTIFY_SPAN {
            return Err(MonotoneError::TooLarge);
        }
        for d in min_d..=hi {
            let d = d as i128;
            let value = eval_poly(&p, d).ok_or(MonotoneError::TooLarge)?;
            if value <= 0 {
                return Err(MonotoneError::NonPositive(d as u64));
            }
            let step = eval_poly(&diff, d).ok_or(MonotoneError::TooLarge)?;
            if step < 0 {
                return Err(MonotoneError::Decreasing(d as u64));
            }
        }
        Ok(())
    }
}

impl fmt::Display for OverheadFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.num.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let mag = c.unsigned_abs();
            let body = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "d".to_string(),
                (1, m) => format!("{m}d"),
                (p, 1) => format!("d^{p}"),
                (p, m) => format!("{m}d^{p}"),
            };
            terms.push((sign, body));
        }
        let mut text = String::new();
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => text.push('-'),
                (0, _) => {}
                (_, s) => text.push_str(&format!(" {s} ")),
            }
            text.push_str(body);
        }
        if text.is_empty() {
            text.push('0');
        }
        if self.den == 1 {
            f.write_str(&text)
        } else if terms.len() > 1 {
            write!(f, "({text})/{}", self.den)
        } else {
            write!(f, "{text}/{}", self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonotoneError {
    #[error("overhead formula is identically zero")]
    Zero,
    #[error("overhead formula has a negative leading coefficient")]
    NegativeLeading,
    #[error("overhead is not positive at d = {0}")]
    NonPositive(u64),
    #[error("overhead decreases between d = {0} and d + 1")]
    Decreasing(u64),
    #[error("overhead formula coefficients are too large to certify")]
    TooLarge,
}

fn eval_poly(coeffs: &[i128], x: i128) -> Option<i128> {
    coeffs
        .iter()
        .rev()
        .try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c))
}

/// Coefficients of `p(x + 1) - p(x)`.
fn forward_difference(p: &[i128]) -> Option<Vec<i128>> {
    let n = p.len();
    let mut shifted = vec![0i128; n];
    // (x + 1)^i expanded with a running binomial row.
    let mut binom = vec![0i128; n];
    for (i, &c) in p.iter().enumerate() {
        binom[0] = 1;
        for j in (1..=i).rev() {
            binom[j] = binom[j].checked_add(binom[j - 1])?;
        }
        for j in 0..=i {
            shifted[j] = shifted[j].checked_add(c.checked_mul(binom[j])?)?;
        }
    }
    let mut diff: Vec<i128> = shifted.iter().zip(p).map(|(s, c)| s - c).collect();
    while diff.len() > 1 && diff.last() == Some(&0) {
        diff.pop();
    }
    Some(diff)
}

/// `1 + max |a_i / a_n|` rounded up; every real root lies below it.
fn cauchy_bound(p: &[i128]) -> u64 {
    let Some(deg) = p.iter().rposition(|&c| c != 0) else {
        return 0;
    };
    if deg == 0 {
        return 0;
    }
    let lead = p[deg].unsigned_abs();
    let max_ratio = p[..deg]
        .iter()
        .map(|c| c.unsigned_abs().div_ceil(lead))
        .max()
        .unwrap_or(0);
    u64::try_from(max_ratio.saturating_add(1)).unwrap_or(u64::MAX)
}

/// Set of code distances a code family can be instantiated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DistanceDomain {
    /// Only one distance exists, e.g. Steane's `[[7,1,3]]`.
    #[serde(rename = "fixed")]
    Fixed { d: u64 },
    /// Any integer distance from `min_d` upward.
    #[serde(rename = "any")]
    AnyInteger { min_d: u64 },
}

impl DistanceDomain {
    pub fn min_distance(&self) -> u64 {
        match *self {
            DistanceDomain::Fixed { d } => d,
            DistanceDomain::AnyInteger { min_d } => min_d,
        }
    }

    pub fn admits(&self, d: u64) -> bool {
        match *self {
            DistanceDomain::Fixed { d: d0 } => d == d0,
            DistanceDomain::AnyInteger { min_d } => d >= min_d,
        }
    }
}

impl fmt::Display for DistanceDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceDomain::Fixed { d } => write!(f, "d = {d}"),
            DistanceDomain::AnyInteger { min_d } => write!(f, "d >= {min_d}"),
        }
    }
}
