use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::Coefficient;
use crate::series::Caps;

/// Sparse nonnegative counts indexed by `(degree, weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCounts<C> {
    caps: Caps,
    entries: BTreeMap<(usize, usize), C>,
}

impl<C: Coefficient> GradedCounts<C> {
    pub fn new(caps: Caps) -> Self {
        GradedCounts {
            caps,
            entries: BTreeMap::new(),
        }
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Adds `count` at `(degree, weight)`. Positions outside the caps and
    /// zero counts are ignored.
    pub fn add(&mut self, degree: usize, weight: usize, count: &C) -> Result<()> {
        if count.is_zero() || !self.caps.contains(degree, weight) {
            return Ok(());
        }
        match self.entries.get_mut(&(degree, weight)) {
            Some(c) => *c = c.try_add(count)?,
            None => {
                self.entries.insert((degree, weight), count.clone());
            }
        }
        Ok(())
    }

    pub fn get(&self, degree: usize, weight: usize) -> C {
        self.entries.get(&(degree, weight)).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero entries in `(degree, weight)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &C)> + '_ {
        self.entries.iter().map(|(&(d, k), c)| (d, k, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> Result<C> {
        self.entries.values().try_fold(C::zero(), |acc, c| acc.try_add(c))
    }

    /// Same entries, each degree moved by `f`; entries mapped to `None` or
    /// out of the new caps are dropped.
    pub fn map_degrees(&self, caps: Caps, f: impl Fn(usize, usize) -> Option<usize>) -> Result<Self> {
        let mut out = Self::new(caps);
        for (d, k, c) in self.iter() {
            if let Some(nd) = f(d, k) {
                out.add(nd, k, c)?;
            }
        }
        Ok(out)
    }
}
