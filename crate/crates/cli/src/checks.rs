//! The check modes.

use confhom::decomposition::hilton_milnor_check;
use confhom::oracle::diff_report;
use confhom::{theorem_a, theorem_b, BigUint, FieldChar, GradedBetti, Mode, ProblemSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::render::{CheckOutcome, Report, Table};
use crate::Failure;

pub const RANDOM_SPECS: usize = 20;

/// Random simply connected problems: `dim M <= 3`, `n <= 3`, label classes
/// in degrees 2 to 4, characteristics 0, 2 and odd in rotation.
pub fn random_specs(seed: u64, count: usize, max_degree: usize) -> Vec<ProblemSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let m_dim = rng.gen_range(0..=3);
            let mut rel: Vec<u64> = (0..=m_dim).map(|_| rng.gen_range(0..=2)).collect();
            if rel.iter().all(|&b| b == 0) {
                rel[rng.gen_range(0..=m_dim)] = 1;
            }
            let mut x = vec![0u64; 5];
            for b in &mut x[2..] {
                *b = rng.gen_range(0..=1);
            }
            if x.iter().all(|&b| b == 0) {
                x[rng.gen_range(2..=4)] = 1;
            }
            let field = match i % 3 {
                0 => FieldChar::Zero,
                1 => FieldChar::Two,
                _ => FieldChar::Odd([3, 5, 7][rng.gen_range(0..3)]),
            };
            ProblemSpec {
                m_dim,
                rel_betti: GradedBetti::new(rel),
                n: rng.gen_range(1..=3),
                x_betti: GradedBetti::new(x),
                field,
                max_degree,
                max_weight: Some(max_degree / 2),
                mode: Mode::TheoremA,
            }
        })
        .collect()
}

fn describe(spec: &ProblemSpec) -> String {
    format!(
        "dim M={} H(M,M0)={:?} n={} H(X)={:?} {}",
        spec.m_dim,
        spec.rel_betti.as_slice(),
        spec.n,
        spec.x_betti.as_slice(),
        spec.field
    )
}

/// Both assembly routes on each random spec, compared bigraded.
pub fn coherence(report: &mut Report, seed: u64, max_degree: usize) -> Result<(), Failure> {
    for (i, spec) in random_specs(seed, RANDOM_SPECS, max_degree).iter().enumerate() {
        let a = theorem_a::<BigUint>(spec)?;
        let b = theorem_b::<BigUint>(&spec.with_mode(Mode::TheoremB))?;
        let diff = diff_report(&a, &b)?;
        let detail = match diff.rows.first() {
            None => describe(spec),
            Some(r) => format!(
                "{}: degree {} weight {} gives {} vs {}",
                describe(spec),
                r.degree,
                r.weight,
                r.left,
                r.right
            ),
        };
        report.checks.push(CheckOutcome {
            name: format!("ab#{i}"),
            passed: diff.is_empty(),
            detail,
        });
    }
    Ok(())
}

/// The wedge decomposition of the label space, compared degreewise.
pub fn wedge(
    report: &mut Report,
    manifold: &(usize, GradedBetti),
    labels: &[GradedBetti],
    field: FieldChar,
    orientable: bool,
    max_degree: usize,
) -> Result<(), Failure> {
    let (m_dim, rel) = manifold;
    let hm = hilton_milnor_check(*m_dim, rel, labels, field, orientable, max_degree)?;
    report.tables.push(Table {
        title: "wedge side vs product over basic words".into(),
        columns: vec!["degree".into(), "wedge".into(), "product".into()],
        rows: hm
            .lhs
            .iter()
            .zip(&hm.rhs)
            .enumerate()
            .map(|(d, (l, r))| vec![d.to_string(), l.to_string(), r.to_string()])
            .collect(),
    });
    let as_json = |v: &[BigUint]| Value::Array(v.iter().map(crate::render::big).collect());
    report.extra.insert(
        "hilton_milnor".into(),
        json!({"lhs": as_json(&hm.lhs), "rhs": as_json(&hm.rhs), "words_used": hm.words_used}),
    );
    let detail = match &hm.first_mismatch {
        None => format!("{} basic words, degrees 0..={max_degree}", hm.words_used),
        Some((d, l, r)) => format!("degree {d}: wedge {l}, product {r}"),
    };
    report.checks.push(CheckOutcome {
        name: "hilton_milnor".into(),
        passed: hm.passed(),
        detail,
    });
    Ok(())
}
