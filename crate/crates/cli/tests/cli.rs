use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn confhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_config(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("run.json");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

/// Degreewise totals from a JSON report.
fn totals(report: &Value, max_degree: usize) -> Vec<u64> {
    let mut by_degree = vec![0; max_degree + 1];
    for term in report["series"].as_array().unwrap() {
        let d = term[0].as_u64().unwrap() as usize;
        by_degree[d] += term[2].as_u64().unwrap();
    }
    by_degree
}

#[test]
fn double_loops_on_s3_from_a_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        &dir,
        r#"{
            "schema_version": 1,
            "field": "F2",
            "manifold": {"preset": "disk", "params": [1]},
            "n": 1,
            "label_space": {"preset": "sphere", "params": [1]},
            "mode": "theorem_b",
            "max_degree": 10,
            "max_weight": 10,
            "format": "json"
        }"#,
    );
    let out = confhom(&["--config", &config]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(totals(&report, 10), vec![1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6]);
}

#[test]
fn simply_connected_hypothesis_is_enforced() {
    let out = confhom(&[
        "--mode", "theorem_a", "--field", "F2", "--manifold", "disk:1", "--label", "sphere:1", "--max-degree", "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("simply connected"), "{err}");
}

#[test]
fn coherence_check_passes() {
    let out = confhom(&["--mode", "check:ab", "--format", "json", "--seed", "11"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["seed"], 11);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 20);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn wedge_check_passes() {
    let out = confhom(&[
        "--mode", "check:hilton_milnor", "--field", "F2", "--manifold", "disk:1", "--label", "wedge:2,3", "--max-degree", "20",
        "--format", "csv",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("hilton_milnor,pass,"));
}

#[test]
fn output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["table", "csv", "json"] {
        let run = |name: &str| {
            let path = dir.path().join(name);
            let out = confhom(&[
                "--mode", "theorem_a", "--field", "Fp:3", "--manifold", "torus:2", "--label", "wedge:2,3", "--n", "2",
                "--max-degree", "14", "--format", format, "--output", path.to_str().unwrap(),
            ]);
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
            fs::read(path).unwrap()
        };
        assert_eq!(run("a"), run("b"), "{format}");
    }
}

#[test]
fn braid_rows_as_dk_table() {
    let out = confhom(&[
        "--mode", "dk_table", "--field", "F2", "--manifold", "disk:1", "--label", "sphere:0", "--max-degree", "3",
        "--max-weight", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, vec!["weight,d0,d1,d2,d3", "0,1,0,0,0", "1,1,0,0,0", "2,1,1,0,0", "3,1,1,0,0"]);
}

#[test]
fn generators_per_factor() {
    let out = confhom(&[
        "--mode", "generators", "--field", "F2", "--manifold", "disk:1", "--label", "sphere:2", "--max-degree", "7",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let gens = &report["factors"][0]["generators"];
    // x2 and Q1 x2; Q1 Q1 x2 sits in degree 11
    assert_eq!(gens.to_string(), "[[2,1,1],[5,2,1]]");
}

#[test]
fn exit_codes() {
    assert_eq!(confhom(&["--mode", "nonsense"]).status.code(), Some(2));
    assert_eq!(confhom(&["--mode", "theorem_a"]).status.code(), Some(2), "missing manifold");
    assert_eq!(confhom(&["--config", "/nonexistent/run.json"]).status.code(), Some(5));
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(&dir, r#"{"schema_version": 1, "field": "F9"}"#);
    assert_eq!(confhom(&["--config", &config]).status.code(), Some(2));
    // theorem_b without a weight cap
    let out = confhom(&["--mode", "theorem_b", "--field", "F2", "--manifold", "disk:1", "--label", "sphere:0", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(3));
}
