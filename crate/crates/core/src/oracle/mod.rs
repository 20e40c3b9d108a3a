//! Independent verification paths.
//!
//! Nothing here calls the Witt counter or the series-based census. Bracket
//! words come from explicit Lyndon enumeration, operation words from an
//! unconstrained search filtered by an admissibility predicate, and the
//! classical series from a separate naive expansion.

pub mod classical;
pub mod diff;
pub mod hall;

use std::fmt;

use crate::betti::{FieldChar, GradedBetti};
use crate::counts::GradedCounts;
use crate::error::{Error, Result};
use crate::series::Caps;
use hall::{lyndon_words, standard_bracket, Bracket};

pub use classical::{classical_series, ClassicalName, ClassicalSeries};
pub use diff::{diff_report, DiffReport, DiffRow};

/// One Dyer–Lashof unit `β^ε Q_b`; `bockstein` is always false mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperationUnit {
    pub index: usize,
    pub bockstein: bool,
}

/// An explicit free-algebra generator: operations (application order) on a
/// bracket word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDescriptor {
    pub atom: Bracket,
    pub ops: Vec<OperationUnit>,
    pub degree: usize,
    pub weight: usize,
    pub field: FieldChar,
}

impl GeneratorDescriptor {
    /// `(degree, weight)` recomputed from the bracket tree and the units.
    pub fn recompute(&self, j: usize) -> (usize, usize) {
        let mut degree = self.atom.degree(j - 1);
        let mut weight = self.atom.length();
        let p = match self.field {
            FieldChar::Two => 2,
            FieldChar::Odd(p) => p as usize,
            FieldChar::Zero => return (degree, weight),
        };
        for unit in &self.ops {
            degree = p * degree + unit.index * (p - 1) - usize::from(unit.bockstein);
            weight *= p;
        }
        (degree, weight)
    }
}

impl fmt::Display for GeneratorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for unit in self.ops.iter().rev() {
            if unit.bockstein {
                write!(f, "β")?;
            }
            write!(f, "Q{}", unit.index)?;
        }
        write!(f, "{} (degree {}, weight {})", self.atom, self.degree, self.weight)
    }
}

/// Whether an operation word (application order) on a class of degree
/// `degree` is admissible for `Ωʲ`.
pub fn is_admissible(field: FieldChar, j: usize, degree: usize, ops: &[OperationUnit]) -> bool {
    if ops.iter().any(|u| u.index == 0 || u.index >= j) {
        return false;
    }
    match field {
        FieldChar::Zero => ops.is_empty(),
        FieldChar::Two => {
            ops.iter().all(|u| !u.bockstein) && ops.windows(2).all(|w| w[1].index <= w[0].index)
        }
        FieldChar::Odd(p) => {
            let p = p as usize;
            let mut d = degree;
            for (t, unit) in ops.iter().enumerate() {
                if unit.index % 2 != d % 2 {
                    return false;
                }
                if t > 0 {
                    let prev = ops[t - 1];
                    if unit.index as i64 > prev.index as i64 - i64::from(prev.bockstein) {
                        return false;
                    }
                }
                d = p * d + unit.index * (p - 1) - usize::from(unit.bockstein);
            }
            true
        }
    }
}

/// Basic bracket words for the degree-`(j−1)` bracket on `H̄_*(Y)`, with
/// self-brackets of odd (shifted) elements kept unless in characteristic 2.
pub fn hall_basis(y: &GradedBetti, j: usize, field: FieldChar, caps: Caps) -> Result<Vec<Bracket>> {
    if j < 2 {
        return Err(Error::InvalidInput(format!("bracket basis needs j >= 2, got {j}")));
    }
    if y.get(0) != 0 {
        return Err(Error::InvalidInput("bracket basis needs a connected Y".into()));
    }
    let shift = j - 1;
    let degrees: Vec<usize> = y
        .iter()
        .flat_map(|(d, b)| std::iter::repeat_n(d, b as usize))
        .collect();
    let Some(&lowest) = degrees.iter().min() else {
        return Ok(Vec::new());
    };
    let max_len = ((caps.max_degree + shift) / (lowest + shift)).min(caps.max_weight);
    let fits = |b: &Bracket| b.degree(shift) <= caps.max_degree && b.length() <= caps.max_weight;

    let mut basis = Vec::new();
    for word in lyndon_words(degrees.len(), max_len) {
        let bracket = standard_bracket(&word, &degrees);
        if !fits(&bracket) {
            continue;
        }
        let shifted_odd = (bracket.degree(shift) + shift) % 2 == 1;
        if shifted_odd && field != FieldChar::Two {
            let square = Bracket::node(bracket.clone(), bracket.clone());
            if fits(&square) {
                basis.push(square);
            }
        }
        basis.push(bracket);
    }
    Ok(basis)
}

fn all_words(
    field: FieldChar,
    j: usize,
    caps: Caps,
    degree: usize,
    weight: usize,
    prefix: &mut Vec<OperationUnit>,
    out: &mut Vec<(Vec<OperationUnit>, usize, usize)>,
) {
    out.push((prefix.clone(), degree, weight));
    let (p, bocksteins): (usize, &[bool]) = match field {
        FieldChar::Zero => return,
        FieldChar::Two => (2, &[false]),
        FieldChar::Odd(p) => (p as usize, &[false, true]),
    };
    for index in 1..j {
        for &bockstein in bocksteins {
            let d = p * degree + index * (p - 1) - usize::from(bockstein);
            let w = p * weight;
            if caps.contains(d, w) {
                prefix.push(OperationUnit { index, bockstein });
                all_words(field, j, caps, d, w, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Every generator of `H_*(ΩʲΣʲY)` within the caps, as an explicit
/// operation word on a bracket word.
pub fn enumerate_generators(
    y: &GradedBetti,
    j: usize,
    field: FieldChar,
    caps: Caps,
) -> Result<Vec<GeneratorDescriptor>> {
    let mut out = Vec::new();
    for atom in hall_basis(y, j, field, caps)? {
        let degree = atom.degree(j - 1);
        let weight = atom.length();
        let mut words = Vec::new();
        all_words(field, j, caps, degree, weight, &mut Vec::new(), &mut words);
        for (ops, d, w) in words {
            if is_admissible(field, j, degree, &ops) {
                out.push(GeneratorDescriptor {
                    atom: atom.clone(),
                    ops,
                    degree: d,
                    weight: w,
                    field,
                });
            }
        }
    }
    Ok(out)
}

/// Descriptor counts by `(degree, weight)`.
pub fn descriptor_counts(descriptors: &[GeneratorDescriptor], caps: Caps) -> Result<GradedCounts<u64>> {
    let mut counts = GradedCounts::new(caps);
    for g in descriptors {
        counts.add(g.degree, g.weight, &1)?;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(y: &[usize], j: usize, field: FieldChar, caps: Caps) -> Vec<(String, usize, usize)> {
        let gens = enumerate_generators(&GradedBetti::spheres(y), j, field, caps).unwrap();
        for g in &gens {
            assert_eq!(g.recompute(j), (g.degree, g.weight), "{g}");
        }
        gens.iter()
            .map(|g| {
                let text = g.to_string();
                let name = text.split(' ').next().unwrap().to_string();
                (name, g.degree, g.weight)
            })
            .collect()
    }

    #[test]
    fn omega2_s3_mod2_words() {
        let got = summary(&[1], 2, FieldChar::Two, Caps::new(7, 7));
        assert_eq!(
            got,
            vec![("x0".into(), 1, 1), ("Q1x0".into(), 3, 2), ("Q1Q1x0".into(), 7, 4)]
        );
    }

    #[test]
    fn omega2_s4_rational_words() {
        let got = summary(&[2], 2, FieldChar::Zero, Caps::new(6, 6));
        assert_eq!(got, vec![("[x0,x0]".into(), 5, 2), ("x0".into(), 2, 1)]);
    }

    #[test]
    fn j3_mod2_ordering() {
        let got = summary(&[1], 3, FieldChar::Two, Caps::new(12, 12));
        let mut degrees: Vec<_> = got.iter().filter(|g| g.2 == 4).map(|g| (g.0.clone(), g.1)).collect();
        degrees.sort_by_key(|g| g.1);
        // outermost operation written first
        assert_eq!(
            degrees,
            vec![("Q1Q1x0".into(), 7), ("Q1Q2x0".into(), 9), ("Q2Q2x0".into(), 10)]
        );
    }

    #[test]
    fn omega2_s3_mod3_words() {
        let got = summary(&[1], 2, FieldChar::Odd(3), Caps::new(17, 20));
        let names: Vec<_> = got.iter().map(|g| (g.0.as_str(), g.1)).collect();
        assert_eq!(
            names,
            vec![("x0", 1), ("Q1x0", 5), ("Q1Q1x0", 17), ("βQ1Q1x0", 16), ("βQ1x0", 4)]
        );
    }

    #[test]
    fn admissibility_predicate() {
        let q = |index, bockstein| OperationUnit { index, bockstein };
        assert!(is_admissible(FieldChar::Two, 3, 1, &[q(2, false), q(1, false)]));
        assert!(!is_admissible(FieldChar::Two, 3, 1, &[q(1, false), q(2, false)]));
        assert!(!is_admissible(FieldChar::Two, 3, 1, &[q(3, false)]));
        assert!(is_admissible(FieldChar::Odd(3), 2, 1, &[q(1, false), q(1, true)]));
        assert!(!is_admissible(FieldChar::Odd(3), 2, 1, &[q(1, true), q(1, false)]));
        assert!(!is_admissible(FieldChar::Odd(3), 2, 2, &[q(1, false)]));
        assert!(!is_admissible(FieldChar::Zero, 4, 2, &[q(1, false)]));
    }
}
