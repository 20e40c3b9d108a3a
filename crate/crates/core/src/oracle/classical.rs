//! Closed-form Poincaré series of classical loop spaces.
//!
//! Expanded with a self-contained table routine so that no result here
//! depends on the series kernel's factor arithmetic.

use crate::betti::FieldChar;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::{BiSeries, Caps};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalName {
    /// `H_*(ΩS^{d+1}) = T(x_d)`.
    James(usize),
    /// `H_*(Ω²S³; F₂)`: polynomial on degrees `2^{k+1} − 1`.
    Omega2S3Mod2,
    /// `H_*(Ω²S³; F_p)`: exterior on `2pᵏ − 1`, polynomial on `2pᵏ − 2`.
    Omega2S3ModP(u64),
    /// Rational homology of `ΩʲSᵐ` for `j ∈ {1, 2}`.
    RationalLoopsSphere { j: usize, m: usize },
    /// Weight-2 quotient of `H_*(ΩʲΣʲSᵈ; F₂)`: one class in each degree
    /// `2d, …, 2d + j − 1`.
    StuntedWeight2 { d: usize, j: usize },
    /// `H_*(ΩS^{2k−1}) ⊗ H_*(Ω²S^{4k−1})`, the homology of `Ω²S^{2k}`.
    EvenSphereSplit { k: usize, field: FieldChar },
}

/// A catalog series; `weighted` says whether its weight grading is the
/// configuration filtration (otherwise compare degreewise only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalSeries<C: Coefficient> {
    pub series: BiSeries<C>,
    pub weighted: bool,
}

#[derive(Clone, Copy)]
enum Gen {
    Poly(usize, usize),
    Ext(usize, usize),
}

/// Expands `∏` of the generators one at a time on a plain table.
fn expand<C: Coefficient>(caps: Caps, gens: &[Gen]) -> Result<BiSeries<C>> {
    let (rows, cols) = (caps.max_degree + 1, caps.max_weight + 1);
    let mut table = vec![vec![0u128; cols]; rows];
    table[0][0] = 1;
    for &g in gens {
        match g {
            Gen::Poly(d, w) => {
                if d == 0 {
                    return Err(Error::Divergent { weight: w });
                }
                // multiply by 1/(1 - x): ascending in-place prefix sum
                for deg in d..rows {
                    for wt in w..cols {
                        table[deg][wt] += table[deg - d][wt - w];
                    }
                }
            }
            Gen::Ext(d, w) => {
                // multiply by (1 + x): descending so each source is read once
                for deg in (d..rows).rev() {
                    for wt in (w..cols).rev() {
                        table[deg][wt] += table[deg - d][wt - w];
                    }
                }
            }
        }
    }
    let mut terms = Vec::new();
    for (deg, row) in table.iter().enumerate() {
        for (wt, &c) in row.iter().enumerate() {
            if c != 0 {
                let c = C::from_u128(c).ok_or(Error::Overflow)?;
                terms.push((deg, wt, c));
            }
        }
    }
    BiSeries::from_terms(caps, terms)
}

fn powers(base: usize, caps: Caps) -> impl Iterator<Item = (u32, usize)> {
    let limit = caps.max_degree.max(caps.max_weight);
    (0u32..).map(move |k| (k, base.pow(k))).take_while(move |&(_, p)| p <= limit + 1)
}

/// Generators of `H_*(Ω²S^{2m+1}; F)` with their configuration weights.
fn double_loops_odd_sphere(m: usize, field: FieldChar, caps: Caps) -> Vec<Gen> {
    let mut gens = Vec::new();
    match field {
        FieldChar::Zero => gens.push(Gen::Ext(2 * m - 1, 1)),
        FieldChar::Two => {
            for (_, q) in powers(2, caps) {
                gens.push(Gen::Poly(2 * m * q - 1, q));
            }
        }
        FieldChar::Odd(p) => {
            for (k, q) in powers(p as usize, caps) {
                gens.push(Gen::Ext(2 * m * q - 1, q));
                if k >= 1 {
                    gens.push(Gen::Poly(2 * m * q - 2, q));
                }
            }
        }
    }
    gens
}

pub fn classical_series<C: Coefficient>(name: ClassicalName, caps: Caps) -> Result<ClassicalSeries<C>> {
    let (gens, weighted) = match name {
        ClassicalName::James(d) => {
            if d == 0 {
                return Err(Error::Divergent { weight: 1 });
            }
            (vec![Gen::Poly(d, 1)], true)
        }
        ClassicalName::Omega2S3Mod2 => (double_loops_odd_sphere(1, FieldChar::Two, caps), false),
        ClassicalName::Omega2S3ModP(p) => match FieldChar::from_prime(p)? {
            f @ FieldChar::Odd(_) => (double_loops_odd_sphere(1, f, caps), false),
            _ => return Err(Error::InvalidInput(format!("Omega2S3ModP needs an odd prime, got {p}"))),
        },
        ClassicalName::RationalLoopsSphere { j, m } => {
            let gens = match (j, m) {
                (1, m) if m >= 2 && m % 2 == 1 => vec![Gen::Poly(m - 1, 1)],
                (1, m) if m >= 2 => vec![Gen::Ext(m - 1, 1), Gen::Poly(2 * m - 2, 2)],
                (2, m) if m >= 3 && m % 2 == 1 => vec![Gen::Ext(m - 2, 1)],
                (2, m) if m >= 4 => vec![Gen::Poly(m - 2, 1), Gen::Ext(2 * m - 3, 2)],
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "no finite rational series catalogued for Ω^{j}S^{m}"
                    )))
                }
            };
            (gens, false)
        }
        ClassicalName::StuntedWeight2 { d, j } => {
            let terms = (2 * d..2 * d + j).map(|deg| (deg, 2, C::one()));
            return Ok(ClassicalSeries {
                series: BiSeries::from_terms(caps, terms)?,
                weighted: true,
            });
        }
        ClassicalName::EvenSphereSplit { k, field } => {
            if k < 2 {
                return Err(Error::InvalidInput(format!("even sphere split needs k >= 2, got {k}")));
            }
            let mut gens = vec![Gen::Poly(2 * k - 2, 1)];
            gens.extend(double_loops_odd_sphere(2 * k - 1, field, caps));
            (gens, false)
        }
    };
    Ok(ClassicalSeries {
        series: expand(caps, &gens)?,
        weighted,
    })
}
