//! `confhom`: batch front end for the configuration-space calculator.

mod checks;
mod config;
mod render;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use confhom::loop_homology::loop_generators;
use confhom::{filtration_table, theorem_a, theorem_b, BigUint, GradedBetti, Mode, ProblemSpec};
use serde_json::{json, Map, Value};

use config::{parse_preset, Format, LabelSpec, ManifoldSpec, Resolved, RunConfig, RunMode};
use render::{big, series_table, Report, Table};

/// Exact Betti numbers of labeled configuration spaces C((M, M0) x R^n; X).
#[derive(Debug, Parser)]
#[command(name = "confhom", version)]
struct Args {
    /// JSON run configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// theorem_a, theorem_b, dk_table, generators, check:ab or check:hilton_milnor.
    #[arg(long)]
    mode: Option<RunMode>,
    /// Q, F2 or Fp:<p>.
    #[arg(long)]
    field: Option<String>,
    /// Manifold preset, e.g. `torus:2`, `disk:1`, `disk_pair:3`, `point`.
    #[arg(long)]
    manifold: Option<String>,
    /// Label space preset: `sphere:<d>` or `wedge:<d1>,<d2>,...`.
    #[arg(long)]
    label: Option<String>,
    /// Number of Euclidean factors.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_weight: Option<usize>,
    /// table, csv or json.
    #[arg(long)]
    format: Option<Format>,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Declare the manifold pair orientable (needed by the wedge check away from F2).
    #[arg(long)]
    orientable: bool,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(confhom::Error),
    Io(PathBuf, io::Error),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(confhom::Error::Integrity(_) | confhom::Error::Overflow) => 4,
            Failure::Core(_) => 3,
            Failure::Internal(_) => 4,
            Failure::Io(..) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Internal(m) => write!(f, "internal: {m}"),
        }
    }
}

impl From<confhom::Error> for Failure {
    fn from(e: confhom::Error) -> Self {
        Failure::Core(e)
    }
}

fn load(args: &Args) -> Result<Resolved, Failure> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.clone(), e))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(f) = &args.field {
        config.field = Some(f.clone());
    }
    if let Some(m) = &args.manifold {
        let (preset, params) = parse_preset(m)?;
        config.manifold = Some(ManifoldSpec::Preset { preset, params });
    }
    if let Some(l) = &args.label {
        let (preset, params) = parse_preset(l)?;
        config.label_space = Some(LabelSpec::Preset { preset, params });
    }
    config.n = args.n.or(config.n);
    config.max_degree = args.max_degree.or(config.max_degree);
    config.max_weight = args.max_weight.or(config.max_weight);
    config.seed = args.seed.or(config.seed);
    if args.orientable {
        config.orientable = Some(true);
    }
    let mode = match (args.mode, &config.mode) {
        (Some(m), _) => m,
        (None, Some(m)) => m.parse().map_err(Failure::Usage)?,
        (None, None) => RunMode::TheoremA,
    };
    let format = match (args.format, &config.format) {
        (Some(f), _) => f,
        (None, Some(f)) => f.parse().map_err(Failure::Usage)?,
        (None, None) => Format::Table,
    };
    Resolved::new(&config, mode, format)
}

fn betti_json(b: &GradedBetti) -> Value {
    json!(b.as_slice())
}

/// The resolved inputs, echoed into every report.
fn spec_json(r: &Resolved) -> Value {
    let mut spec = Map::new();
    if let Some(field) = r.field {
        spec.insert("field".into(), json!(field.to_string()));
    }
    if let Some((dim, rel)) = &r.manifold {
        spec.insert("manifold".into(), json!({"dim": dim, "rel_betti": betti_json(rel)}));
    }
    spec.insert("n".into(), json!(r.n));
    if let Some(labels) = &r.labels {
        let summands: Vec<Value> = labels.iter().map(betti_json).collect();
        spec.insert("label_space".into(), json!({"summands": summands}));
    }
    if let Some(d) = r.max_degree {
        spec.insert("max_degree".into(), json!(d));
    }
    if let Some(k) = r.max_weight {
        spec.insert("max_weight".into(), json!(k));
    }
    if r.orientable {
        spec.insert("orientable".into(), json!(true));
    }
    Value::Object(spec)
}

fn weight_rows(series: &confhom::Series) -> Table {
    let caps = series.caps();
    let mut columns = vec!["weight".to_string()];
    columns.extend((0..=caps.max_degree).map(|d| format!("d{d}")));
    Table {
        title: "filtration quotients D_k by degree".into(),
        columns,
        rows: filtration_table(series)
            .into_iter()
            .map(|row| {
                let mut cells = vec![row.weight.to_string()];
                cells.extend(row.betti.iter().map(BigUint::to_string));
                cells
            })
            .collect(),
    }
}

/// Generators of each loop-space factor `Ω^{m−q} S^m X`, one block per `q`.
fn generators(report: &mut Report, spec: &ProblemSpec) -> Result<(), Failure> {
    spec.validate()?;
    let caps = spec.caps()?;
    let m = spec.m_dim + spec.n;
    let mut rows = Vec::new();
    let mut factors = Vec::new();
    for (q, beta) in spec.rel_betti.iter() {
        let j = m - q;
        let y = spec.x_betti.suspend(q);
        let census: Vec<(usize, usize, BigUint)> = if j >= 2 {
            loop_generators::<BigUint>(&y, j, spec.field, caps)?
                .iter()
                .map(|(d, k, c)| (d, k, c.clone()))
                .collect()
        } else {
            // tensor algebra (j = 1) or trivial extension (j = 0) on H̄(Y)
            y.iter()
                .filter(|&(d, _)| caps.contains(d, 1))
                .map(|(d, b)| (d, 1, BigUint::from(b)))
                .collect()
        };
        for (d, k, c) in &census {
            rows.push(vec![q.to_string(), j.to_string(), beta.to_string(), d.to_string(), k.to_string(), c.to_string()]);
        }
        let census: Vec<Value> = census.iter().map(|(d, k, c)| json!([d, k, big(c)])).collect();
        factors.push(json!({"q": q, "j": j, "multiplicity": beta, "generators": census}));
    }
    report.tables.push(Table {
        title: "generators per loop-space factor".into(),
        columns: ["q", "j", "multiplicity", "degree", "weight", "count"].map(String::from).to_vec(),
        rows,
    });
    report.extra.insert("factors".into(), Value::Array(factors));
    Ok(())
}

fn run(r: &Resolved) -> Result<Report, Failure> {
    let mut report = Report::new(r.mode.name(), r.seed, spec_json(r));
    match r.mode {
        RunMode::TheoremA | RunMode::TheoremB => {
            let series = if r.mode == RunMode::TheoremA {
                theorem_a::<BigUint>(&r.problem(Mode::TheoremA)?)?
            } else {
                theorem_b::<BigUint>(&r.problem(Mode::TheoremB)?)?
            };
            report.tables.push(series_table(&series));
            report.series = Some(series);
        }
        RunMode::DkTable => {
            let spec = r.problem(Mode::TheoremA)?;
            let simply_connected = spec.x_betti.min_degree().is_none_or(|d| d >= 2);
            let series = if simply_connected {
                theorem_a::<BigUint>(&spec)?
            } else {
                theorem_b::<BigUint>(&spec.with_mode(Mode::TheoremB))?
            };
            report.tables.push(weight_rows(&series));
            report.series = Some(series);
        }
        RunMode::Generators => generators(&mut report, &r.problem(Mode::TheoremA)?)?,
        RunMode::CheckAb => checks::coherence(&mut report, r.seed, r.max_degree.unwrap_or(30))?,
        RunMode::CheckHiltonMilnor => checks::wedge(
            &mut report,
            r.need_manifold()?,
            r.need_labels()?,
            r.need_field()?,
            r.orientable,
            r.need_max_degree()?,
        )?,
    }
    Ok(report)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = load(&args).and_then(|resolved| {
        let report = run(&resolved)?;
        emit(&report.render(resolved.format)?, args.output.as_ref())?;
        Ok(report.all_passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("confhom: a check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("confhom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
