//! Weight-filtered Poincaré series of `H_*(ΩʲΣʲY; F)`.
//!
//! For `j ≥ 2` the homology is a free graded-commutative algebra. Its
//! generators are admissible Dyer–Lashof words applied to basic products of
//! the degree-`(j−1)` Browder bracket on `H̄_*(Y)`. The weight of a generator
//! is its configuration length: bracket length times `p^s` for `s`
//! operations. For `j = 1` the homology is the tensor algebra on `H̄_*(Y)` and
//! for `j = 0` it is `F ⊕ H̄_*(Y)` in weight 1.

use crate::betti::{FieldChar, GradedBetti};
use crate::counts::GradedCounts;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::{BiSeries, Caps, FactorKind};
use crate::witt::{lie_atom_counts, DegreeWeightTable, WittMode};

/// Basic bracket words by `(actual degree, bracket length)`.
pub type AtomTable<C> = GradedCounts<C>;

/// Free-algebra generators by `(degree, weight)`.
pub type GeneratorCensus<C> = GradedCounts<C>;

/// Reduced Betti numbers of `ΣᵠX`.
pub fn suspend_betti(x: &GradedBetti, q: usize) -> GradedBetti {
    x.suspend(q)
}

/// Shape of the free factor on one generator of the given degree.
pub fn generator_kind(degree: usize, field: FieldChar) -> FactorKind {
    match field {
        FieldChar::Two => FactorKind::Polynomial,
        _ if degree % 2 == 1 => FactorKind::Exterior,
        _ => FactorKind::Polynomial,
    }
}

/// Bracket convention of the free Browder-bracket Lie algebra over `field`.
pub fn witt_mode(field: FieldChar) -> WittMode {
    match field {
        FieldChar::Two => WittMode::Unsigned,
        FieldChar::Zero | FieldChar::Odd(_) => WittMode::Signed,
    }
}

fn require_connected(y: &GradedBetti, j: usize) -> Result<()> {
    if y.get(0) != 0 {
        return Err(Error::InvalidInput(format!(
            "Ω^{j}Σ^{j}Y needs Y connected for j >= 1, but H̄_0(Y) has rank {}",
            y.get(0)
        )));
    }
    Ok(())
}

/// Basic products of the Browder bracket of degree `j − 1` on `H̄_*(Y)`.
///
/// Shifting every class up by `j − 1` turns the bracket into an ordinary
/// degree-0 graded Lie bracket, so the counts come from [`lie_atom_counts`]
/// in the shifted grading and are then shifted back down.
pub fn atom_census<C: Coefficient>(
    y: &GradedBetti,
    j: usize,
    field: FieldChar,
    caps: Caps,
) -> Result<AtomTable<C>> {
    if j < 2 {
        return Err(Error::InvalidInput(format!("atom census needs j >= 2, got {j}")));
    }
    require_connected(y, j)?;
    let shift = j - 1;
    let shifted_caps = Caps::new(caps.max_degree + shift, caps.max_weight);
    let mut letters = DegreeWeightTable::new(shifted_caps);
    for (d, b) in y.iter() {
        letters.add(d + shift, 1, &C::from_count(b))?;
    }
    let shifted = lie_atom_counts(&letters, witt_mode(field), shifted_caps)?;
    shifted.map_degrees(caps, |d, _| d.checked_sub(shift))
}

/// Closes the atoms under admissible Dyer–Lashof words.
///
/// Operations are listed in application order. In characteristic 2 the
/// lower indices satisfy `j−1 ≥ b₁ ≥ b₂ ≥ … ≥ 1` and `Q_b` sends degree `d`
/// to `2d + b`. At an odd prime `p` each unit is `Q_b` followed by an
/// optional Bockstein: degree `d ↦ pd + b(p−1) − ε`, with `b ≡ d (mod 2)`
/// and `b_{t+1} ≤ b_t − ε_t`. Rationally there are no operations.
pub fn generator_census<C: Coefficient>(
    atoms: &AtomTable<C>,
    j: usize,
    field: FieldChar,
    caps: Caps,
) -> Result<GeneratorCensus<C>> {
    if j < 2 {
        return Err(Error::InvalidInput(format!("generator census needs j >= 2, got {j}")));
    }
    let mut census = GeneratorCensus::new(caps);
    for (d, w, count) in atoms.iter() {
        match field {
            FieldChar::Zero => census.add(d, w, count)?,
            FieldChar::Two => close_mod2(&mut census, d, w, j - 1, count)?,
            FieldChar::Odd(p) => close_odd(&mut census, p as usize, d, w, j - 1, count)?,
        }
    }
    Ok(census)
}

fn close_mod2<C: Coefficient>(
    census: &mut GeneratorCensus<C>,
    degree: usize,
    weight: usize,
    max_index: usize,
    count: &C,
) -> Result<()> {
    census.add(degree, weight, count)?;
    let caps = census.caps();
    for b in 1..=max_index {
        let (nd, nw) = (2 * degree + b, 2 * weight);
        if !caps.contains(nd, nw) {
            break;
        }
        close_mod2(census, nd, nw, b, count)?;
    }
    Ok(())
}

fn close_odd<C: Coefficient>(
    census: &mut GeneratorCensus<C>,
    p: usize,
    degree: usize,
    weight: usize,
    max_index: usize,
    count: &C,
) -> Result<()> {
    census.add(degree, weight, count)?;
    let caps = census.caps();
    let nw = p * weight;
    if nw > caps.max_weight {
        return Ok(());
    }
    for b in (1..=max_index).filter(|b| b % 2 == degree % 2) {
        let top = p * degree + b * (p - 1);
        for bockstein in 0..=1 {
            let nd = top - bockstein;
            if nd <= caps.max_degree {
                close_odd(census, p, nd, nw, b - bockstein, count)?;
            }
        }
    }
    Ok(())
}

/// Poincaré series of the free graded-commutative algebra on a census.
pub fn free_algebra_series<C: Coefficient>(
    census: &GeneratorCensus<C>,
    field: FieldChar,
    caps: Caps,
) -> Result<BiSeries<C>> {
    census.iter().try_fold(BiSeries::one(caps), |acc, (d, w, c)| {
        acc.power_factor(d, w, c, generator_kind(d, field))
    })
}

/// Free-algebra generators of `H_*(ΩʲΣʲY)` for `j ≥ 2`.
pub fn loop_generators<C: Coefficient>(
    y: &GradedBetti,
    j: usize,
    field: FieldChar,
    caps: Caps,
) -> Result<GeneratorCensus<C>> {
    let atoms = atom_census(y, j, field, caps)?;
    generator_census(&atoms, j, field, caps)
}

/// Weight-filtered Poincaré series of `H_*(ΩʲΣʲY; F)` from the reduced
/// Betti numbers of `Y`.
pub fn factor_series<C: Coefficient>(
    y: &GradedBetti,
    j: usize,
    field: FieldChar,
    caps: Caps,
) -> Result<BiSeries<C>> {
    let letters = y.iter().map(|(d, b)| (d, 1, C::from_count(b)));
    match j {
        0 => BiSeries::from_terms(caps, std::iter::once((0, 0, C::one())).chain(letters)),
        1 => {
            require_connected(y, j)?;
            BiSeries::from_terms(caps, letters)?.inverse_one_minus()
        }
        _ => free_algebra_series(&loop_generators(y, j, field, caps)?, field, caps),
    }
}
