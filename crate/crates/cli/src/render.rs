//! Output documents and their three renderings.

use std::str::FromStr;

use confhom::{BigUint, Series};
use serde_json::{json, Map, Number, Value};

use crate::config::{Format, SCHEMA_VERSION};
use crate::Failure;

/// A titled grid of cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything one run reports.
#[derive(Clone, Debug)]
pub struct Report {
    pub mode: String,
    pub seed: u64,
    pub spec: Value,
    pub series: Option<Series>,
    pub tables: Vec<Table>,
    /// Extra JSON members, keyed by name.
    pub extra: Map<String, Value>,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(mode: &str, seed: u64, spec: Value) -> Self {
        Report {
            mode: mode.to_string(),
            seed,
            spec,
            series: None,
            tables: Vec::new(),
            extra: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.to_json())
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                text.push('\n');
                Ok(text)
            }
            Format::Csv => self.render_csv(),
            Format::Table => Ok(self.render_table()),
        }
    }

    fn header(&self) -> String {
        format!("# confhom schema_version={SCHEMA_VERSION} mode={} seed={}\n# spec {}\n", self.mode, self.seed, self.spec)
    }

    fn all_tables(&self) -> Vec<Table> {
        let mut tables = self.tables.clone();
        if !self.checks.is_empty() {
            tables.push(Table {
                title: "checks".into(),
                columns: vec!["check".into(), "result".into(), "detail".into()],
                rows: self
                    .checks
                    .iter()
                    .map(|c| vec![c.name.clone(), if c.passed { "pass" } else { "FAIL" }.into(), c.detail.clone()])
                    .collect(),
            });
        }
        tables
    }

    fn render_csv(&self) -> Result<String, Failure> {
        let mut out = self.header();
        for table in self.all_tables() {
            out.push_str(&format!("# {}\n", table.title));
            let mut writer = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Internal(e.to_string());
            writer.write_record(&table.columns).map_err(io)?;
            for row in &table.rows {
                writer.write_record(row).map_err(io)?;
            }
            let bytes = writer.into_inner().map_err(|e| Failure::Internal(e.to_string()))?;
            out.push_str(&String::from_utf8_lossy(&bytes));
        }
        Ok(out)
    }

    fn render_table(&self) -> String {
        let mut out = self.header();
        for table in self.all_tables() {
            out.push('\n');
            out.push_str(&table.title);
            out.push('\n');
            let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
            for row in &table.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&line(&table.columns));
            for row in &table.rows {
                out.push_str(&line(row));
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        let series: Vec<Value> = self
            .series
            .iter()
            .flat_map(|s| s.terms())
            .map(|(d, k, c)| json!([d, k, big(c)]))
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        let mut doc = Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("mode".into(), json!(self.mode));
        doc.insert("seed".into(), json!(self.seed));
        doc.insert("spec".into(), self.spec.clone());
        doc.insert("series".into(), Value::Array(series));
        doc.insert("checks".into(), Value::Array(checks));
        for (k, v) in &self.extra {
            doc.insert(k.clone(), v.clone());
        }
        Value::Object(doc)
    }
}

/// An exact JSON number.
pub fn big(c: &BigUint) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("decimal digits form a JSON number"))
}

/// Degree-major: one row per degree, one column per weight, then the total.
pub fn series_table(s: &Series) -> Table {
    let caps = s.caps();
    let mut columns = vec!["degree".to_string()];
    columns.extend((0..=caps.max_weight).map(|k| format!("w{k}")));
    columns.push("total".into());
    let rows = (0..=caps.max_degree)
        .map(|d| {
            let mut total = BigUint::default();
            let mut row = vec![d.to_string()];
            for k in 0..=caps.max_weight {
                let c = s.coeff(d, k);
                total += &c;
                row.push(c.to_string());
            }
            row.push(total.to_string());
            row
        })
        .collect();
    Table {
        title: "betti numbers by degree and weight".into(),
        columns,
        rows,
    }
}
