//! Truncated bigraded power series with exact unsigned coefficients.
//!
//! A [`BiSeries`] is a formal sum `Σ c(d, k) tᵈ uᵏ` where `d` is a homological
//! degree and `k` a filtration weight. Storage is a dense rectangle
//! `0 ≤ d ≤ D`, `0 ≤ k ≤ K`; every operation truncates eagerly to these caps
//! and never reads or writes outside them.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Truncation caps: total homological degree and filtration weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Caps {
    pub max_degree: usize,
    pub max_weight: usize,
}

impl Caps {
    pub const fn new(max_degree: usize, max_weight: usize) -> Self {
        Caps { max_degree, max_weight }
    }

    pub fn contains(&self, degree: usize, weight: usize) -> bool {
        degree <= self.max_degree && weight <= self.max_weight
    }

    fn width(&self) -> usize {
        self.max_weight + 1
    }

    fn len(&self) -> usize {
        (self.max_degree + 1) * self.width()
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={}, K={}", self.max_degree, self.max_weight)
    }
}

/// Shape of a free graded-commutative factor on generators of one bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// `(1 − tᵈuᵏ)^(−c)`
    Polynomial,
    /// `(1 + tᵈuᵏ)^c`
    Exterior,
}

#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries<C> {
    caps: Caps,
    coeffs: Vec<C>,
}

impl<C: Coefficient> BiSeries<C> {
    pub fn zero(caps: Caps) -> Self {
        BiSeries {
            caps,
            coeffs: vec![C::zero(); caps.len()],
        }
    }

    /// The unit series `1`.
    pub fn one(caps: Caps) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = C::one();
        s
    }

    /// Builds a series from `(degree, weight, coefficient)` terms. Terms
    /// outside the caps are dropped; repeated positions accumulate.
    pub fn from_terms<I>(caps: Caps, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, C)>,
    {
        let mut s = Self::zero(caps);
        for (d, k, c) in terms {
            if caps.contains(d, k) {
                let i = s.index(d, k);
                s.coeffs[i] = s.coeffs[i].try_add(&c)?;
            }
        }
        Ok(s)
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    #[inline]
    fn index(&self, degree: usize, weight: usize) -> usize {
        degree * self.caps.width() + weight
    }

    /// Coefficient at `(degree, weight)`; `None` outside the caps.
    pub fn get(&self, degree: usize, weight: usize) -> Option<&C> {
        if self.caps.contains(degree, weight) {
            Some(&self.coeffs[self.index(degree, weight)])
        } else {
            None
        }
    }

    /// Coefficient at `(degree, weight)`, zero outside the caps.
    pub fn coeff(&self, degree: usize, weight: usize) -> C {
        self.get(degree, weight).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in degree-major order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> + '_ {
        let w = self.caps.width();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / w, i % w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the constant term is 1, as for the Poincaré series of a
    /// connected algebra.
    pub fn is_unital(&self) -> bool {
        self.coeffs[0].is_one()
    }

    /// Betti numbers of the weight-`k` slice, indexed by degree.
    pub fn weight_slice(&self, weight: usize) -> Vec<C> {
        if weight > self.caps.max_weight {
            return vec![C::zero(); self.caps.max_degree + 1];
        }
        (0..=self.caps.max_degree)
            .map(|d| self.coeffs[self.index(d, weight)].clone())
            .collect()
    }

    /// Total Betti numbers by degree, summing over all weights.
    pub fn degreewise(&self) -> Result<Vec<C>> {
        (0..=self.caps.max_degree)
            .map(|d| {
                self.coeffs[self.index(d, 0)..=self.index(d, self.caps.max_weight)]
                    .iter()
                    .try_fold(C::zero(), |acc, c| acc.try_add(c))
            })
            .collect()
    }

    /// Restricts to smaller caps.
    pub fn truncate(&self, caps: Caps) -> Result<Self> {
        if caps.max_degree > self.caps.max_degree || caps.max_weight > self.caps.max_weight {
            return Err(Error::Config(format!(
                "cannot truncate series with caps ({}) to larger caps ({})",
                self.caps, caps
            )));
        }
        let mut out = Self::zero(caps);
        for d in 0..=caps.max_degree {
            for k in 0..=caps.max_weight {
                let i = out.index(d, k);
                out.coeffs[i] = self.coeffs[self.index(d, k)].clone();
            }
        }
        Ok(out)
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::Config(format!(
                "cap mismatch: ({}) vs ({})",
                self.caps, other.caps
            )));
        }
        Ok(())
    }

    fn sparse_terms(&self) -> Vec<(usize, usize, C)> {
        self.terms().map(|(d, k, c)| (d, k, c.clone())).collect()
    }

    /// Cauchy product truncated at the shared caps.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let caps = self.caps;
        let a = self.sparse_terms();
        let b = other.sparse_terms();
        let mut out = Self::zero(caps);
        for (d1, k1, c1) in &a {
            for (d2, k2, c2) in &b {
                let (d, k) = (d1 + d2, k1 + k2);
                if caps.contains(d, k) {
                    let i = out.index(d, k);
                    out.coeffs[i] = out.coeffs[i].try_add(&c1.try_mul(c2)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `self^exponent` by repeated squaring.
    pub fn pow(&self, mut exponent: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(self.caps);
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplies by the Poincaré series of the free graded-commutative
    /// algebra on `count` generators of bidegree `(degree, weight)`.
    pub fn power_factor(
        &self,
        degree: usize,
        weight: usize,
        count: &C,
        kind: FactorKind,
    ) -> Result<Self> {
        let terms = factor_terms(self.caps, degree, weight, count, kind)?;
        if terms.is_empty() {
            return Ok(self.clone());
        }
        let caps = self.caps;
        let mut out = self.clone();
        for d in 0..=caps.max_degree {
            for k in 0..=caps.max_weight {
                let mut acc = self.coeffs[self.index(d, k)].clone();
                for (r, c) in &terms {
                    let (sd, sk) = (r * degree, r * weight);
                    if sd > d || sk > k {
                        break;
                    }
                    let src = &self.coeffs[self.index(d - sd, k - sk)];
                    if !src.is_zero() {
                        acc = acc.try_add(&c.try_mul(src)?)?;
                    }
                }
                let i = out.index(d, k);
                out.coeffs[i] = acc;
            }
        }
        Ok(out)
    }

    /// `1 / (1 − self)`, the sum of all powers of `self`.
    pub fn inverse_one_minus(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput(
                "inverse_one_minus requires a vanishing constant term".into(),
            ));
        }
        let caps = self.caps;
        let f = self.sparse_terms();
        let mut g = Self::zero(caps);
        // Row-major order visits (d - d1, k - k1) before (d, k) whenever
        // (d1, k1) != (0, 0).
        for d in 0..=caps.max_degree {
            for k in 0..=caps.max_weight {
                let mut acc = if d == 0 && k == 0 { C::one() } else { C::zero() };
                for (d1, k1, c) in &f {
                    if *d1 <= d && *k1 <= k {
                        let prev = &g.coeffs[g.index(d - d1, k - k1)];
                        if !prev.is_zero() {
                            acc = acc.try_add(&c.try_mul(prev)?)?;
                        }
                    }
                }
                let i = g.index(d, k);
                g.coeffs[i] = acc;
            }
        }
        Ok(g)
    }

    /// Exact quotient `self / denominator` for a unital denominator.
    ///
    /// Fails with an integrity error if the quotient has a negative
    /// coefficient, i.e. if `denominator` does not divide `self` within the
    /// nonnegative series.
    pub fn divide(&self, denominator: &Self) -> Result<Self> {
        self.check_caps(denominator)?;
        if !denominator.is_unital() {
            return Err(Error::InvalidInput("divisor must have constant term 1".into()));
        }
        let caps = self.caps;
        let den: Vec<_> = denominator
            .sparse_terms()
            .into_iter()
            .filter(|(d, k, _)| (*d, *k) != (0, 0))
            .collect();
        let mut q = Self::zero(caps);
        for d in 0..=caps.max_degree {
            for k in 0..=caps.max_weight {
                let mut sub = C::zero();
                for (d1, k1, c) in &den {
                    if *d1 <= d && *k1 <= k {
                        let prev = &q.coeffs[q.index(d - d1, k - k1)];
                        if !prev.is_zero() {
                            sub = sub.try_add(&c.try_mul(prev)?)?;
                        }
                    }
                }
                let i = q.index(d, k);
                q.coeffs[i] = self.coeffs[i].try_sub(&sub).ok_or_else(|| {
                    Error::Integrity(format!("negative quotient coefficient at ({d}, {k})"))
                })?;
            }
        }
        Ok(q)
    }

    /// Shifts each weight-`k` slice down by `shift·k` degrees.
    ///
    /// The result keeps only the window where every weight is complete:
    /// caps `(D − shift·K, K)`.
    pub fn desuspend_by_weight(&self, shift: usize) -> Result<Self> {
        let caps = self.caps;
        let reach = shift * caps.max_weight;
        if reach > caps.max_degree {
            return Err(Error::Config(format!(
                "desuspension by {shift} per weight needs max_degree >= {reach}, have {}",
                caps.max_degree
            )));
        }
        let out_caps = Caps::new(caps.max_degree - reach, caps.max_weight);
        let mut out = Self::zero(out_caps);
        for (d, k, c) in self.terms() {
            let lowered = d.checked_sub(shift * k).ok_or_else(|| {
                Error::Integrity(format!(
                    "desuspension of ({d}, {k}) by {shift} per weight gives a negative degree"
                ))
            })?;
            if lowered <= out_caps.max_degree {
                let i = out.index(lowered, k);
                out.coeffs[i] = c.clone();
            }
        }
        Ok(out)
    }
}

/// Nonconstant terms `(r, coefficient of xʳ)` of the factor series in the
/// monomial `x = tᵈuᵏ`, truncated to `caps`, in increasing `r`.
fn factor_terms<C: Coefficient>(
    caps: Caps,
    degree: usize,
    weight: usize,
    count: &C,
    kind: FactorKind,
) -> Result<Vec<(usize, C)>> {
    if degree == 0 && kind == FactorKind::Polynomial {
        return Err(Error::Divergent { weight });
    }
    if degree == 0 && weight == 0 {
        return Err(Error::InvalidInput("generator of bidegree (0, 0)".into()));
    }
    if count.is_zero() {
        return Ok(Vec::new());
    }
    let bound = |cap: usize, step: usize| cap.checked_div(step).unwrap_or(usize::MAX);
    let top = bound(caps.max_degree, degree).min(bound(caps.max_weight, weight));
    let mut terms = Vec::new();
    let mut coeff = C::one();
    for r in 1..=top {
        let rr = C::from_count(r as u64);
        // Polynomial: C(c+r-1, r) = C(c+r-2, r-1)(c+r-1)/r.
        // Exterior:   C(c, r)     = C(c, r-1)(c-r+1)/r.
        let numerator = match kind {
            FactorKind::Polynomial => count.try_add(&C::from_count(r as u64 - 1))?,
            FactorKind::Exterior => match count.try_sub(&C::from_count(r as u64 - 1)) {
                Some(v) if !v.is_zero() => v,
                _ => break,
            },
        };
        coeff = coeff.try_mul(&numerator)? / rr;
        terms.push((r, coeff.clone()));
    }
    Ok(terms)
}

impl<C: Coefficient> fmt::Debug for BiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries[{}] {{", self.caps)?;
        let mut first = true;
        for (d, k, c) in self.terms() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, " ({d},{k}):{c}")?;
        }
        write!(f, " }}")
    }
}
