//! End-to-end tests of the `gme` binary: exit codes, file round trips,
//! output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gme(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gme"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("gme-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn evaluate_exits_zero_for_both_verdicts() {
    // detection
    let out = gme(&["evaluate", "--state", "ghz", "--d", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("GME-detected"));

    // inconclusive is data, not an error
    let out = gme(&[
        "evaluate",
        "--state",
        "mixed",
        "--d",
        "3",
        "--criterion",
        "ct-qudit",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn evaluate_rejects_criterion_dimension_mismatch() {
    let out = gme(&[
        "evaluate",
        "--state",
        "ghz",
        "--d",
        "3",
        "--criterion",
        "pt-qubit",
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("d = 2"), "{}", stderr(&out));
}

#[test]
fn gen_then_evaluate_round_trips_through_a_file() {
    let path = temp_path("state.json");
    let out = gme(&[
        "gen",
        "--state",
        "ghz",
        "--d",
        "2",
        "--noise-weight",
        "0.05",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let out = gme(&[
        "evaluate",
        "--state",
        path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json = stdout(&out);
    assert!(json.contains("\"criterion\": \"pt-qubit\""));
    // M = 2 - 2x = 1.9 at noise weight 0.05
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let v = value["value"].as_f64().unwrap();
    assert!((v - 1.9).abs() < 1e-9, "value {v}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn written_state_files_reread_bit_identically() {
    let path = temp_path("roundtrip.json");
    let out = gme(&[
        "gen",
        "--state",
        "random-pure",
        "--d",
        "2",
        "--seed",
        "31",
        "--visibility",
        "0.9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    let state = gme_cli::matrixfile::read_state(&path).unwrap();
    let rewritten = gme_cli::matrixfile::state_to_string(&state);
    let original = std::fs::read_to_string(&path).unwrap();
    assert_eq!(original, rewritten);
    std::fs::remove_file(&path).ok();
}

#[test]
fn invalid_files_fail_with_named_invariant() {
    let path = temp_path("bad.json");
    std::fs::write(&path, r#"{"d":2,"parties":3,"re":[[1.0]],"im":[[0.0]]}"#).unwrap();
    let out = gme(&["evaluate", "--state", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("8x8"), "{}", stderr(&out));
    std::fs::remove_file(&path).ok();

    let path = temp_path("trace.json");
    let mixed = gme_core::states::maximally_mixed(2).unwrap();
    let text = gme_cli::matrixfile::state_to_string(&mixed).replacen(
        "1.2500000000000000e-1",
        "3.2500000000000000e-1",
        1,
    );
    std::fs::write(&path, text).unwrap();
    let out = gme(&["evaluate", "--state", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("trace"), "{}", stderr(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn evaluate_qutrit_ghz_endpoints() {
    // visibility 0 is white noise: value 1
    let out = gme(&[
        "evaluate",
        "--state",
        "ghz",
        "--d",
        "3",
        "--criterion",
        "ct-qudit",
        "--mode",
        "corollary",
        "--visibility",
        "0",
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((doc["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);

    // visibility 1: value (1/3)(sqrt(11/9) + sqrt(2) + 6)
    let out = gme(&[
        "evaluate",
        "--state",
        "ghz",
        "--d",
        "3",
        "--criterion",
        "ct-qudit",
        "--mode",
        "corollary",
        "--visibility",
        "1",
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let expected = ((11.0f64 / 9.0).sqrt() + 2.0f64.sqrt() + 6.0) / 3.0;
    assert!((doc["value"].as_f64().unwrap() - expected).abs() < 1e-8);
    assert_eq!(doc["verdict"], "inconclusive");
}

#[test]
fn scan_emits_the_pinned_csv_columns() {
    let out = gme(&[
        "scan",
        "--state",
        "ghz",
        "--d",
        "2",
        "--criterion",
        "pt-qubit",
        "--noise-weight",
        "--grid",
        "0:1:11",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "noise-weight,value,threshold,value_minus_threshold"
    );
    assert_eq!(text.lines().count(), 12);
    // value column is 2 - 2x
    for (k, line) in text.lines().skip(1).enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let x: f64 = fields[0].parse().unwrap();
        let value: f64 = fields[1].parse().unwrap();
        assert!((x - k as f64 / 10.0).abs() < 1e-12);
        assert!((value - (2.0 - 2.0 * x)).abs() < 1e-9);
    }
}

#[test]
fn scan_of_constant_family_has_constant_value_column() {
    let out = gme(&[
        "scan",
        "--state",
        "mixed",
        "--d",
        "3",
        "--grid",
        "0:1:5",
        "--visibility",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 5);
    for v in &values {
        assert!((v - values[0]).abs() < 1e-12);
    }
}

#[test]
fn crossover_no_crossing_uses_distinct_exit_code() {
    let out = gme(&[
        "crossover",
        "--state",
        "mixed",
        "--d",
        "2",
        "--grid",
        "0:1:5",
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("no crossing"));

    // degenerate grid is an input error, not a no-crossing
    let out = gme(&["crossover", "--state", "ghz", "--d", "2", "--grid", "1:0:5"]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}

#[test]
fn audit_csv_is_deterministic_per_seed() {
    let args = [
        "audit",
        "--bipartition",
        "1|23",
        "--d",
        "2",
        "--samples",
        "10",
        "--seed",
        "99",
        "--format",
        "csv",
    ];
    let first = gme(&args);
    let second = gme(&args);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).starts_with("sample,statistic,running_max,bound\n"));

    let other_seed = gme(&[
        "audit",
        "--bipartition",
        "1|23",
        "--d",
        "2",
        "--samples",
        "10",
        "--seed",
        "100",
        "--format",
        "csv",
    ]);
    assert_ne!(stdout(&first), stdout(&other_seed));
}

#[test]
fn audit_rejects_bad_bipartition_label() {
    let out = gme(&["audit", "--bipartition", "12|3", "--d", "2"]);
    assert!(!out.status.success());
}
