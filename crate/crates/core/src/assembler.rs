//! Poincaré series of `H_*(C((M, M₀) × Rⁿ; X); F)`.
//!
//! With `m = dim M + n`, the homology is the tensor product over `q` of
//! `β_q(M, M₀)` copies of `H_*(Ω^{m−q} S^m X)`, filtered by configuration
//! length. The `TheoremB` mode computes the same product for `S²X` and shifts
//! each weight-`k` quotient down by `2k`, which works for any `X`.

use rayon::prelude::*;

use crate::betti::{FieldChar, GradedBetti};
use crate::error::{Error, Result};
use crate::loop_homology::{factor_series, free_algebra_series, loop_generators, GeneratorCensus};
use crate::scalar::Coefficient;
use crate::series::{BiSeries, Caps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    TheoremA,
    TheoremB,
}

/// One problem instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    /// `dim M`.
    pub m_dim: usize,
    /// Betti numbers of `H_*(M, M₀)`, supported in `0..=m_dim`.
    pub rel_betti: GradedBetti,
    /// Number of Euclidean factors, at least 1.
    pub n: usize,
    /// Reduced Betti numbers of the label space `X`.
    pub x_betti: GradedBetti,
    pub field: FieldChar,
    pub max_degree: usize,
    /// Required in `TheoremB` mode. `TheoremA` mode defaults to `max_degree / 2`,
    /// above which nothing survives in degrees `<= max_degree`.
    pub max_weight: Option<usize>,
    pub mode: Mode,
}

impl ProblemSpec {
    pub fn with_mode(&self, mode: Mode) -> Self {
        ProblemSpec { mode, ..self.clone() }
    }

    /// Output caps for this spec's mode.
    pub fn caps(&self) -> Result<Caps> {
        let weight = match (self.mode, self.max_weight) {
            (_, Some(k)) => k,
            (Mode::TheoremA, None) => self.max_degree / 2,
            (Mode::TheoremB, None) => {
                return Err(Error::InvalidInput(
                    "theorem_b mode needs an explicit weight cap: for disconnected X \
                     infinitely many weights reach a fixed degree"
                        .into(),
                ))
            }
        };
        Ok(Caps::new(self.max_degree, weight))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if let Some(top) = self.rel_betti.max_degree() {
            if top > self.m_dim {
                return Err(Error::InvalidInput(format!(
                    "H_*(M, M0) has a class in degree {top} above dim M = {}",
                    self.m_dim
                )));
            }
        }
        if self.mode == Mode::TheoremA {
            if let Some(d) = self.x_betti.min_degree().filter(|&d| d < 2) {
                return Err(Error::InvalidInput(format!(
                    "theorem_a mode needs a simply connected label space X, but H̄_{d}(X) is nonzero"
                )));
            }
        }
        self.caps().map(|_| ())
    }
}

/// `⊗_q H_*(Ω^{m−q} Σ^{m−q} ΣᵠX)^{⊗β_q}` with `m = m_dim + n`, without the
/// simple-connectivity check on `X` (only connectivity, which every factor needs).
pub fn configuration_series<C: Coefficient>(
    m_dim: usize,
    rel_betti: &GradedBetti,
    n: usize,
    label: &GradedBetti,
    field: FieldChar,
    caps: Caps,
) -> Result<BiSeries<C>> {
    let m = m_dim + n;
    let classes: Vec<(usize, u64)> = rel_betti.iter().collect();
    if let Some(&(q, _)) = classes.iter().find(|(q, _)| *q > m_dim) {
        // Ω^{m−q}S^mX = * for q > m never arises: H_q(M, M0) = 0 above dim M.
        return Err(Error::InvalidInput(format!(
            "relative class in degree {q} exceeds dim M = {m_dim}"
        )));
    }

    enum Part<C> {
        Free(GeneratorCensus<C>),
        Tensor(BiSeries<C>),
    }

    let parts = classes
        .par_iter()
        .map(|&(q, beta)| {
            let j = m - q;
            let y = label.suspend(q);
            if j >= 2 {
                let gens = loop_generators::<C>(&y, j, field, caps)?;
                let times = C::from_count(beta);
                let mut scaled = GeneratorCensus::new(caps);
                for (d, w, c) in gens.iter() {
                    scaled.add(d, w, &c.try_mul(&times)?)?;
                }
                Ok(Part::Free(scaled))
            } else {
                Ok(Part::Tensor(factor_series::<C>(&y, j, field, caps)?.pow(beta)?))
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let mut census = GeneratorCensus::new(caps);
    let mut result = BiSeries::one(caps);
    for part in parts {
        match part {
            Part::Free(g) => {
                for (d, w, c) in g.iter() {
                    census.add(d, w, c)?;
                }
            }
            Part::Tensor(s) => result = result.multiply(&s)?,
        }
    }
    result.multiply(&free_algebra_series(&census, field, caps)?)
}

/// Bigraded series of `H_*(C((M, M₀) × Rⁿ; X))` as the tensor product of
/// loop-space factors, for simply connected `X`.
pub fn theorem_a<C: Coefficient>(spec: &ProblemSpec) -> Result<BiSeries<C>> {
    if spec.mode != Mode::TheoremA {
        return Err(Error::InvalidInput("spec is not in theorem_a mode".into()));
    }
    spec.validate()?;
    configuration_series(spec.m_dim, &spec.rel_betti, spec.n, &spec.x_betti, spec.field, spec.caps()?)
}

/// Bigraded series of `H_*(C((M, M₀) × Rⁿ; X))` for any `X`: the filtration
/// quotients for `S²X`, each weight-`k` piece desuspended by `2k`.
pub fn theorem_b<C: Coefficient>(spec: &ProblemSpec) -> Result<BiSeries<C>> {
    if spec.mode != Mode::TheoremB {
        return Err(Error::InvalidInput("spec is not in theorem_b mode".into()));
    }
    spec.validate()?;
    let caps = spec.caps()?;
    let wide = Caps::new(caps.max_degree + 2 * caps.max_weight, caps.max_weight);
    let suspended = spec.x_betti.suspend(2);
    let series: BiSeries<C> =
        configuration_series(spec.m_dim, &spec.rel_betti, spec.n, &suspended, spec.field, wide)?;
    series.desuspend_by_weight(2)
}

/// Dispatches on `spec.mode`.
pub fn compute<C: Coefficient>(spec: &ProblemSpec) -> Result<BiSeries<C>> {
    match spec.mode {
        Mode::TheoremA => theorem_a(spec),
        Mode::TheoremB => theorem_b(spec),
    }
}

/// Betti numbers of one filtration quotient `D_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow<C> {
    pub weight: usize,
    pub betti: Vec<C>,
}

/// One row per weight `0..=K`; the rows partition the series.
pub fn filtration_table<C: Coefficient>(s: &BiSeries<C>) -> Vec<WeightRow<C>> {
    (0..=s.caps().max_weight)
        .map(|weight| WeightRow {
            weight,
            betti: s.weight_slice(weight),
        })
        .collect()
}

/// `H̄_*(M/M₀ ∧ X)`: what the weight-1 slice must equal.
pub fn weight_one_betti(spec: &ProblemSpec) -> GradedBetti {
    spec.rel_betti.smash(&spec.x_betti)
}
