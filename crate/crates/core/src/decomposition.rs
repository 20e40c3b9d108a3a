//! Hilton–Milnor product decomposition of `C((M, M₀) × R; X₁ ∨ … ∨ X_r)` as a
//! Poincaré-series identity.
//!
//! The configuration space on a wedge splits as a weak product over basic
//! words `ω` in letters `x₁, …, x_r`. The factor for `ω` is a configuration
//! space of a manifold pair of dimension `ℓ(ω)·dim M` (a tubular
//! neighbourhood of the diagonal in `M^ℓ`) labelled by the smash product
//! `X₁^{∧a₁} ∧ … ∧ X_r^{∧a_r}`. Mod 2 the pair's homology is that of
//! `(M, M₀)` raised by the codimension `(ℓ − 1)·dim M` of the diagonal.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::assembler::configuration_series;
use crate::betti::{FieldChar, GradedBetti};
use crate::error::{Error, Result};
use crate::series::{BiSeries, Caps};

/// Basic words with a fixed letter content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicWord {
    /// Occurrences `aᵢ` of each letter.
    pub multiplicities: Vec<usize>,
    /// How many basic words have this content.
    pub count: BigUint,
}

impl BasicWord {
    pub fn length(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &a in parts {
        for i in 1..=a as u64 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// Number of basic words of content `multiplicities`:
/// `(1/ℓ) Σ_{d | gcd} μ(d) · (ℓ/d)! / ∏ (aᵢ/d)!`.
pub fn basic_word_count(multiplicities: &[usize]) -> BigUint {
    let length: usize = multiplicities.iter().sum();
    if length == 0 {
        return BigUint::zero();
    }
    let g = multiplicities.iter().fold(0usize, |g, &a| g.gcd(&a));
    let mut sum = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu != 0 {
            let reduced: Vec<usize> = multiplicities.iter().map(|a| a / d).collect();
            sum += BigInt::from(mu) * BigInt::from(multinomial(&reduced));
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(length));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("necklace counts are nonnegative")
}

fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// All letter contents with at least one basic word, lengths `1..=max_length`,
/// ordered by length and then lexicographically decreasing content.
pub fn basic_words(letters: usize, max_length: usize) -> Vec<BasicWord> {
    if letters == 0 {
        return Vec::new();
    }
    let mut words = Vec::new();
    for length in 1..=max_length {
        let mut contents = Vec::new();
        compositions(length, letters, &mut Vec::new(), &mut contents);
        for multiplicities in contents {
            let count = basic_word_count(&multiplicities);
            if !count.is_zero() {
                words.push(BasicWord { multiplicities, count });
            }
        }
    }
    words
}

/// Outcome of a degreewise Hilton–Milnor comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiltonMilnorReport {
    pub field: FieldChar,
    pub max_degree: usize,
    /// Betti numbers of the wedge side, by degree.
    pub lhs: Vec<BigUint>,
    /// Betti numbers of the product side, by degree.
    pub rhs: Vec<BigUint>,
    /// Basic-word contents that reach degree `max_degree`.
    pub words_used: usize,
    /// First degree where the sides differ, with both values.
    pub first_mismatch: Option<(usize, BigUint, BigUint)>,
}

impl HiltonMilnorReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `H_*(C((M, M₀) × R; ∨ Xᵢ))` with the product over basic words,
/// degreewise up to `max_degree`.
///
/// Mod 2 the diagonal shift needs no orientation; other characteristics are
/// accepted only with `orientable` set.
pub fn hilton_milnor_check(
    m_dim: usize,
    rel_betti: &GradedBetti,
    labels: &[GradedBetti],
    field: FieldChar,
    orientable: bool,
    max_degree: usize,
) -> Result<HiltonMilnorReport> {
    if field != FieldChar::Two && !orientable {
        return Err(Error::InvalidInput(format!(
            "Hilton-Milnor check over {field} needs an orientable manifold pair; pass the orientable flag"
        )));
    }
    if labels.is_empty() {
        return Err(Error::InvalidInput("need at least one label space".into()));
    }
    let mut connectivity = usize::MAX;
    for (i, x) in labels.iter().enumerate() {
        match x.min_degree() {
            Some(d) if d >= 1 => connectivity = connectivity.min(d),
            Some(_) => {
                return Err(Error::InvalidInput(format!("label space {} is not connected", i + 1)))
            }
            None => return Err(Error::InvalidInput(format!("label space {} is contractible", i + 1))),
        }
    }
    if let Some(top) = rel_betti.max_degree().filter(|&t| t > m_dim) {
        return Err(Error::InvalidInput(format!(
            "H_*(M, M0) has a class in degree {top} above dim M = {m_dim}"
        )));
    }

    // A weight-k class has degree >= k * connectivity on both sides.
    let caps = Caps::new(max_degree, max_degree / connectivity);
    let wedge = labels.iter().fold(GradedBetti::empty(), |acc, x| acc.wedge(x));
    let lhs = configuration_series::<BigUint>(m_dim, rel_betti, 1, &wedge, field, caps)?;

    let mut factors: Vec<(usize, GradedBetti, GradedBetti)> = Vec::new();
    if let Some(rel_bottom) = rel_betti.min_degree() {
        for word in basic_words(labels.len(), caps.max_weight) {
            let length = word.length();
            let smash = word
                .multiplicities
                .iter()
                .zip(labels)
                .flat_map(|(&a, x)| std::iter::repeat_n(x, a))
                .fold(GradedBetti::spheres(&[0]), |acc, x| acc.smash(x));
            let shift = (length - 1) * m_dim;
            let Some(smash_bottom) = smash.min_degree() else { continue };
            if rel_bottom + shift + smash_bottom > max_degree {
                continue;
            }
            let count = word.count.to_u64().ok_or(Error::Overflow)?;
            factors.push((length, rel_betti.suspend(shift).scale(count), smash));
        }
    }

    let pieces = factors
        .par_iter()
        .map(|(length, rel, smash)| {
            configuration_series::<BigUint>(length * m_dim, rel, 1, smash, field, caps)
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = pieces
        .iter()
        .try_fold(BiSeries::one(caps), |acc, s| acc.multiply(s))?;

    let lhs = lhs.degreewise()?;
    let rhs = rhs.degreewise()?;
    let first_mismatch = lhs
        .iter()
        .zip(&rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(d, (a, b))| (d, a.clone(), b.clone()));
    Ok(HiltonMilnorReport {
        field,
        max_degree,
        lhs,
        rhs,
        words_used: factors.len(),
        first_mismatch,
    })
}
