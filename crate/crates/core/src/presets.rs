//! Named manifold pairs and label spaces.

use num_integer::binomial;

use crate::betti::{FieldChar, GradedBetti};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldPreset {
    Point,
    /// `Sᵐ`.
    Sphere(usize),
    /// `Tᵐ`.
    Torus(usize),
    /// Closed orientable surface of genus `g`.
    Surface(usize),
    /// `Dᵐ` with empty `M₀`; `Dᵐ × Rⁿ` is isotopic to `R^{m+n}`.
    Disk(usize),
    /// `(Dᵐ, ∂Dᵐ)`.
    DiskPair(usize),
    /// `RPᵐ`, only over `F₂`.
    RealProjective(usize),
}

impl ManifoldPreset {
    /// Looks up a preset by name with its integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let one = |ctor: fn(usize) -> ManifoldPreset| match params {
            [p] => Ok(ctor(*p)),
            _ => Err(Error::InvalidInput(format!(
                "preset {name:?} takes exactly one parameter, got {}",
                params.len()
            ))),
        };
        match name {
            "point" if params.is_empty() => Ok(ManifoldPreset::Point),
            "point" => Err(Error::InvalidInput("preset \"point\" takes no parameters".into())),
            "sphere" => one(ManifoldPreset::Sphere),
            "torus" => one(ManifoldPreset::Torus),
            "surface" => one(ManifoldPreset::Surface),
            "disk" => one(ManifoldPreset::Disk),
            "disk_pair" => one(ManifoldPreset::DiskPair),
            "rp" | "real_projective" => one(ManifoldPreset::RealProjective),
            other => Err(Error::InvalidInput(format!("unknown manifold preset {other:?}"))),
        }
    }

    /// `(dim M, Betti numbers of H_*(M, M₀; F))`.
    pub fn betti(&self, field: FieldChar) -> Result<(usize, GradedBetti)> {
        Ok(match *self {
            ManifoldPreset::Point => (0, GradedBetti::spheres(&[0])),
            ManifoldPreset::Sphere(m) => (m, GradedBetti::spheres(&[0, m])),
            ManifoldPreset::Torus(m) => (
                m,
                GradedBetti::new((0..=m as u64).map(|q| binomial(m as u64, q)).collect()),
            ),
            ManifoldPreset::Surface(g) => {
                (2, GradedBetti::from_pairs([(0, 1), (1, 2 * g as u64), (2, 1)]))
            }
            ManifoldPreset::Disk(m) => (m, GradedBetti::spheres(&[0])),
            ManifoldPreset::DiskPair(m) => (m, GradedBetti::spheres(&[m])),
            ManifoldPreset::RealProjective(m) => {
                if field != FieldChar::Two {
                    return Err(Error::InvalidInput(format!(
                        "RP^{m} preset gives mod-2 Betti numbers and needs field F2, got {field}"
                    )));
                }
                (m, GradedBetti::new(vec![1; m + 1]))
            }
        })
    }
}

/// Reduced Betti numbers of a sphere `Sᵈ` (including `S⁰`).
pub fn sphere_label(d: usize) -> GradedBetti {
    GradedBetti::spheres(&[d])
}

/// The wedge summands `S^{d₁}, …, S^{d_r}` of a wedge of spheres.
pub fn wedge_summands(degrees: &[usize]) -> Vec<GradedBetti> {
    degrees.iter().map(|&d| sphere_label(d)).collect()
}
