//! Run configuration: the JSON file, command-line overrides, and the
//! resolved problem.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use confhom::presets::{sphere_label, wedge_summands, ManifoldPreset};
use confhom::{FieldChar, GradedBetti, Mode, ProblemSpec};
use serde::Deserialize;

use crate::Failure;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 0x5eed_c0f1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    TheoremA,
    TheoremB,
    DkTable,
    Generators,
    CheckAb,
    CheckHiltonMilnor,
}

impl RunMode {
    pub fn name(self) -> &'static str {
        match self {
            RunMode::TheoremA => "theorem_a",
            RunMode::TheoremB => "theorem_b",
            RunMode::DkTable => "dk_table",
            RunMode::Generators => "generators",
            RunMode::CheckAb => "check:ab",
            RunMode::CheckHiltonMilnor => "check:hilton_milnor",
        }
    }
}

impl FromStr for RunMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "theorem_a" => RunMode::TheoremA,
            "theorem_b" => RunMode::TheoremB,
            "dk_table" => RunMode::DkTable,
            "generators" => RunMode::Generators,
            "check:ab" => RunMode::CheckAb,
            "check:hilton_milnor" => RunMode::CheckHiltonMilnor,
            other => {
                return Err(format!(
                    "unknown mode {other:?}; expected theorem_a, theorem_b, dk_table, generators, \
                     check:ab or check:hilton_milnor"
                ))
            }
        })
    }
}

impl fmt::Display for RunMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}; expected table, csv or json")),
        }
    }
}

/// Betti numbers either as a list indexed by degree or as a degree map.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BettiSpec {
    List(Vec<u64>),
    Map(BTreeMap<String, u64>),
}

impl BettiSpec {
    fn resolve(&self) -> Result<GradedBetti, Failure> {
        match self {
            BettiSpec::List(v) => Ok(GradedBetti::new(v.clone())),
            BettiSpec::Map(m) => {
                let mut pairs = Vec::new();
                for (d, b) in m {
                    let d = d
                        .parse::<usize>()
                        .map_err(|_| Failure::Usage(format!("betti map key {d:?} is not a degree")))?;
                    pairs.push((d, *b));
                }
                Ok(GradedBetti::from_pairs(pairs))
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ManifoldSpec {
    Preset {
        preset: String,
        #[serde(default)]
        params: Vec<usize>,
    },
    Explicit {
        dim: usize,
        rel_betti: BettiSpec,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum LabelSpec {
    Preset {
        preset: String,
        #[serde(default)]
        params: Vec<usize>,
    },
    Betti {
        betti: BettiSpec,
    },
    Summands {
        summands: Vec<BettiSpec>,
    },
}

/// The config file. Every field may also come from a flag.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: Option<u32>,
    pub field: Option<String>,
    pub manifold: Option<ManifoldSpec>,
    pub n: Option<usize>,
    pub label_space: Option<LabelSpec>,
    pub mode: Option<String>,
    pub max_degree: Option<usize>,
    pub max_weight: Option<usize>,
    pub format: Option<String>,
    pub seed: Option<u64>,
    pub orientable: Option<bool>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, Failure> {
        let config: RunConfig =
            serde_json::from_str(text).map_err(|e| Failure::Usage(format!("config: {e}")))?;
        match config.schema_version {
            None | Some(SCHEMA_VERSION) => Ok(config),
            Some(v) => Err(Failure::Usage(format!(
                "config schema_version {v} is not supported (expected {SCHEMA_VERSION})"
            ))),
        }
    }
}

/// Splits `name:1,2` into a name and integer parameters.
pub fn parse_preset(text: &str) -> Result<(String, Vec<usize>), Failure> {
    let (name, params) = text.split_once(':').unwrap_or((text, ""));
    let params = params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("preset parameter {p:?} in {text:?} is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    Ok((name.to_string(), params))
}

/// Everything a run needs, after merging flags over the file.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub mode: RunMode,
    pub format: Format,
    pub field: Option<FieldChar>,
    pub manifold: Option<(usize, GradedBetti)>,
    pub n: usize,
    pub labels: Option<Vec<GradedBetti>>,
    pub max_degree: Option<usize>,
    pub max_weight: Option<usize>,
    pub seed: u64,
    pub orientable: bool,
}

impl Resolved {
    pub fn new(config: &RunConfig, mode: RunMode, format: Format) -> Result<Self, Failure> {
        let field = config
            .field
            .as_deref()
            .map(|f| f.parse::<FieldChar>().map_err(|e| Failure::Usage(e.to_string())))
            .transpose()?;
        let manifold = match (&config.manifold, field) {
            (None, _) => None,
            (Some(ManifoldSpec::Explicit { dim, rel_betti }), _) => Some((*dim, rel_betti.resolve()?)),
            (Some(ManifoldSpec::Preset { .. }), None) => {
                return Err(Failure::Usage("a manifold preset needs the field to be set".into()))
            }
            (Some(ManifoldSpec::Preset { preset, params }), Some(field)) => {
                Some(ManifoldPreset::parse(preset, params)?.betti(field)?)
            }
        };
        let labels = match &config.label_space {
            None => None,
            Some(LabelSpec::Preset { preset, params }) => Some(match (preset.as_str(), params.as_slice()) {
                ("sphere", [d]) => vec![sphere_label(*d)],
                ("wedge", ds) if !ds.is_empty() => wedge_summands(ds),
                _ => {
                    return Err(Failure::Usage(format!(
                        "label preset {preset:?} with {} parameters; expected sphere:<d> or wedge:<d1>,<d2>,..",
                        params.len()
                    )))
                }
            }),
            Some(LabelSpec::Betti { betti }) => Some(vec![betti.resolve()?]),
            Some(LabelSpec::Summands { summands }) => {
                Some(summands.iter().map(BettiSpec::resolve).collect::<Result<_, _>>()?)
            }
        };
        Ok(Resolved {
            mode,
            format,
            field,
            manifold,
            n: config.n.unwrap_or(1),
            labels,
            max_degree: config.max_degree,
            max_weight: config.max_weight,
            seed: config.seed.unwrap_or(DEFAULT_SEED),
            orientable: config.orientable.unwrap_or(false),
        })
    }

    pub fn need_field(&self) -> Result<FieldChar, Failure> {
        self.field.ok_or_else(|| Failure::Usage(format!("mode {} needs a field", self.mode)))
    }

    pub fn need_manifold(&self) -> Result<&(usize, GradedBetti), Failure> {
        self.manifold
            .as_ref()
            .ok_or_else(|| Failure::Usage(format!("mode {} needs a manifold", self.mode)))
    }

    pub fn need_labels(&self) -> Result<&[GradedBetti], Failure> {
        self.labels
            .as_deref()
            .ok_or_else(|| Failure::Usage(format!("mode {} needs a label space", self.mode)))
    }

    pub fn need_max_degree(&self) -> Result<usize, Failure> {
        self.max_degree
            .ok_or_else(|| Failure::Usage(format!("mode {} needs max_degree", self.mode)))
    }

    /// The label space as one graded module (the wedge of its summands).
    pub fn label_betti(&self) -> Result<GradedBetti, Failure> {
        Ok(self
            .need_labels()?
            .iter()
            .fold(GradedBetti::empty(), |acc, x| acc.wedge(x)))
    }

    pub fn problem(&self, mode: Mode) -> Result<ProblemSpec, Failure> {
        let (m_dim, rel_betti) = self.need_manifold()?.clone();
        Ok(ProblemSpec {
            m_dim,
            rel_betti,
            n: self.n,
            x_betti: self.label_betti()?,
            field: self.need_field()?,
            max_degree: self.need_max_degree()?,
            max_weight: self.max_weight,
            mode,
        })
    }
}
