//! Dimension counts of free graded Lie algebras.
//!
//! The tensor algebra on a graded set of letters is the universal enveloping
//! algebra of the free Lie algebra on those letters, so its Poincaré series
//! `1/(1 − f)` factors as a product over a basis of the Lie algebra. We peel
//! that product one bracket length at a time: once all factors of length
//! `< ℓ` are divided out, the length-`ℓ` slice of what remains is exactly the
//! count of length-`ℓ` basis elements.

use crate::counts::GradedCounts;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::{BiSeries, Caps, FactorKind};

/// Lie-algebra counts by `(degree, bracket length)`.
pub type DegreeWeightTable<C> = GradedCounts<C>;

/// How the enveloping algebra factors over a Lie basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WittMode {
    /// Graded (super) convention: odd elements contribute exterior factors,
    /// and an odd element has a nonzero self-bracket.
    Signed,
    /// Every basis element contributes a polynomial factor and self-brackets
    /// vanish.
    Unsigned,
}

impl WittMode {
    pub fn factor_kind(self, degree: usize) -> FactorKind {
        match self {
            WittMode::Signed if degree % 2 == 1 => FactorKind::Exterior,
            _ => FactorKind::Polynomial,
        }
    }
}

/// Counts of Lie basis elements by `(degree, length)` for the free Lie
/// algebra on `gens` (length-1 entries only).
pub fn lie_atom_counts<C: Coefficient>(
    gens: &DegreeWeightTable<C>,
    mode: WittMode,
    caps: Caps,
) -> Result<DegreeWeightTable<C>> {
    if let Some((d, k, _)) = gens.iter().find(|&(d, k, _)| k != 1 || d == 0) {
        return Err(Error::InvalidInput(format!(
            "Lie generators must have length 1 and degree >= 1, got ({d}, {k})"
        )));
    }
    let letters = BiSeries::from_terms(caps, gens.iter().map(|(d, _, c)| (d, 1, c.clone())))?;
    let tensor = letters.inverse_one_minus()?;

    let mut atoms = DegreeWeightTable::new(caps);
    let mut remainder = tensor.clone();
    for length in 1..=caps.max_weight {
        let mut layer = BiSeries::one(caps);
        for degree in length..=caps.max_degree {
            let count = remainder.coeff(degree, length);
            if count.is_zero() {
                continue;
            }
            atoms.add(degree, length, &count)?;
            layer = layer.power_factor(degree, length, &count, mode.factor_kind(degree))?;
        }
        remainder = remainder.divide(&layer)?;
        if let Some((d, k, _)) = remainder.terms().find(|&(d, k, _)| k <= length && (d, k) != (0, 0)) {
            return Err(Error::Integrity(format!(
                "Witt peeling left a term at ({d}, {k}) after length {length}"
            )));
        }
    }

    let rebuilt = product_of_factors(&atoms, mode, caps)?;
    if rebuilt != tensor {
        return Err(Error::Integrity(
            "Lie counts do not reproduce the tensor-algebra series".into(),
        ));
    }
    Ok(atoms)
}

/// `∏ factor(d, ℓ)^{L_{d,ℓ}}` over the table, with factor shapes from `mode`.
pub fn product_of_factors<C: Coefficient>(
    atoms: &DegreeWeightTable<C>,
    mode: WittMode,
    caps: Caps,
) -> Result<BiSeries<C>> {
    atoms.iter().try_fold(BiSeries::one(caps), |acc, (d, k, c)| {
        acc.power_factor(d, k, c, mode.factor_kind(d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gens(degrees: &[(usize, u64)], caps: Caps) -> DegreeWeightTable<u64> {
        let mut t = DegreeWeightTable::new(caps);
        for &(d, c) in degrees {
            t.add(d, 1, &c).unwrap();
        }
        t
    }

    fn entries(t: &DegreeWeightTable<u64>) -> Vec<(usize, usize, u64)> {
        t.iter().map(|(d, k, c)| (d, k, *c)).collect()
    }

    /// Lyndon words of length n over an alphabet of size r, by brute force:
    /// words strictly smaller than all of their proper rotations.
    fn lyndon_count(r: usize, n: usize) -> u64 {
        let total = r.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let mut w = Vec::with_capacity(n);
                let mut c = code;
                for _ in 0..n {
                    w.push(c % r);
                    c /= r;
                }
                (1..n).all(|s| {
                    let rot: Vec<_> = w[s..].iter().chain(&w[..s]).copied().collect();
                    w < rot
                })
            })
            .count() as u64
    }

    #[test]
    fn even_generator_signed() {
        let caps = Caps::new(20, 10);
        let atoms = lie_atom_counts(&gens(&[(2, 1)], caps), WittMode::Signed, caps).unwrap();
        assert_eq!(entries(&atoms), vec![(2, 1, 1)]);
    }

    #[test]
    fn odd_generator_signed_has_self_bracket() {
        let caps = Caps::new(30, 10);
        let atoms = lie_atom_counts(&gens(&[(3, 1)], caps), WittMode::Signed, caps).unwrap();
        assert_eq!(entries(&atoms), vec![(3, 1, 1), (6, 2, 1)]);
    }

    #[test]
    fn two_letters_unsigned_are_necklaces() {
        let caps = Caps::new(8, 8);
        let atoms = lie_atom_counts(&gens(&[(1, 2)], caps), WittMode::Unsigned, caps).unwrap();
        let by_length: Vec<u64> = (1..=5).map(|l| atoms.get(l, l)).collect();
        assert_eq!(by_length, vec![2, 1, 2, 3, 6]);
        for l in 1..=8 {
            assert_eq!(atoms.get(l, l), lyndon_count(2, l), "length {l}");
        }
    }

    #[test]
    fn three_letters_unsigned_match_lyndon_enumeration() {
        let caps = Caps::new(7, 7);
        let atoms = lie_atom_counts(&gens(&[(1, 3)], caps), WittMode::Unsigned, caps).unwrap();
        for l in 1..=7 {
            assert_eq!(atoms.get(l, l), lyndon_count(3, l), "length {l}");
        }
    }

    #[test]
    fn two_odd_letters_signed_count_squares() {
        // Lyndon words plus squares of odd Lyndon words; length 2 gives ab, [a,a], [b,b].
        let caps = Caps::new(6, 6);
        let atoms = lie_atom_counts(&gens(&[(1, 2)], caps), WittMode::Signed, caps).unwrap();
        assert_eq!(atoms.get(1, 1), 2);
        assert_eq!(atoms.get(2, 2), 3);
    }

    #[test]
    fn rejects_non_letter_generators() {
        let caps = Caps::new(6, 6);
        let mut t = DegreeWeightTable::<u64>::new(caps);
        t.add(2, 2, &1).unwrap();
        assert!(lie_atom_counts(&t, WittMode::Signed, caps).is_err());
        let t = gens(&[(0, 1)], caps);
        assert!(lie_atom_counts(&t, WittMode::Signed, caps).is_err());
    }

    proptest! {
        #[test]
        fn unsigned_single_letter_is_one_atom(d in 1usize..7) {
            let caps = Caps::new(30, 12);
            let atoms = lie_atom_counts(&gens(&[(d, 1)], caps), WittMode::Unsigned, caps).unwrap();
            prop_assert_eq!(entries(&atoms), vec![(d, 1, 1)]);
        }

        #[test]
        fn support_bound_and_reconstruction(
            letters in prop::collection::vec((1usize..5, 1u64..3), 1..4),
            signed in any::<bool>(),
        ) {
            let caps = Caps::new(14, 8);
            let mode = if signed { WittMode::Signed } else { WittMode::Unsigned };
            let g = gens(&letters, caps);
            let atoms = lie_atom_counts(&g, mode, caps).unwrap();
            let min_deg = letters.iter().map(|l| l.0).min().unwrap();
            for (d, k, _) in atoms.iter() {
                prop_assert!(d >= k * min_deg);
            }
            let tensor = BiSeries::from_terms(caps, g.iter().map(|(d, _, c)| (d, 1, *c)))
                .unwrap()
                .inverse_one_minus()
                .unwrap();
            prop_assert_eq!(product_of_factors(&atoms, mode, caps).unwrap(), tensor);
        }
    }
}
