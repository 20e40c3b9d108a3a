use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Betti numbers indexed by degree. Trailing zeros are trimmed, so equal
/// graded dimensions compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedBetti(Vec<u64>);

impl GradedBetti {
    pub fn new(mut by_degree: Vec<u64>) -> Self {
        while by_degree.last() == Some(&0) {
            by_degree.pop();
        }
        GradedBetti(by_degree)
    }

    pub fn empty() -> Self {
        GradedBetti(Vec::new())
    }

    /// One class in each listed degree (repeats accumulate), as for a wedge
    /// of spheres.
    pub fn spheres(degrees: &[usize]) -> Self {
        let mut v = vec![0; degrees.iter().map(|d| d + 1).max().unwrap_or(0)];
        for &d in degrees {
            v[d] += 1;
        }
        GradedBetti::new(v)
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Self {
        let mut v = Vec::new();
        for (d, b) in pairs {
            if v.len() <= d {
                v.resize(d + 1, 0);
            }
            v[d] += b;
        }
        GradedBetti::new(v)
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Nonzero `(degree, betti)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().copied().enumerate().filter(|(_, b)| *b != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.iter().next().map(|(d, _)| d)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Reduced homology of the `q`-fold suspension.
    pub fn suspend(&self, q: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; q];
        v.extend_from_slice(&self.0);
        GradedBetti(v)
    }

    /// Degreewise sum: the reduced homology of a wedge.
    pub fn wedge(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        GradedBetti::new((0..len).map(|d| self.get(d) + other.get(d)).collect())
    }

    /// Convolution: the reduced homology of a smash product over a field.
    pub fn smash(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return GradedBetti::empty();
        }
        let mut v = vec![0; self.0.len() + other.0.len() - 1];
        for (d1, b1) in self.iter() {
            for (d2, b2) in other.iter() {
                v[d1 + d2] += b1 * b2;
            }
        }
        GradedBetti::new(v)
    }

    /// Every Betti number multiplied by `factor`.
    pub fn scale(&self, factor: u64) -> Self {
        GradedBetti::new(self.0.iter().map(|b| b * factor).collect())
    }
}

impl fmt::Debug for GradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldChar {
    Zero,
    Two,
    Odd(u64),
}

impl FieldChar {
    /// Characteristic `p`, validated: 0, 2, or an odd prime.
    pub fn from_prime(p: u64) -> Result<Self> {
        match p {
            0 => Ok(FieldChar::Zero),
            2 => Ok(FieldChar::Two),
            p if p >= 3 && is_prime(p) => Ok(FieldChar::Odd(p)),
            p => Err(Error::InvalidInput(format!(
                "field characteristic must be 0 or a prime, got {p}"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Two => 2,
            FieldChar::Odd(p) => *p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChar::Zero => write!(f, "Q"),
            FieldChar::Two => write!(f, "F2"),
            FieldChar::Odd(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldChar {
    type Err = Error;

    /// Accepts `Q`, `F2`, or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldChar::Zero),
            "F2" => Ok(FieldChar::Two),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::InvalidInput(format!(
                            "unknown field {other:?}; expected Q, F2 or Fp:<p>"
                        ))
                    })?;
                match FieldChar::from_prime(p)? {
                    FieldChar::Zero => Err(Error::InvalidInput("Fp:0 is not a prime field".into())),
                    c => Ok(c),
                }
            }
        }
    }
}
