//! End-to-end checks of the `afh` binary: config validation, exit codes,
//! output files, and byte determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn afh(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afh"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary should run")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn cell_task_writes_summary_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "cell.json",
        r#"{
            "operator": {"name": "div", "dim": 2, "p": 2.0},
            "integrand": {"kind": "laminate", "a_lo": 1.0, "a_hi": 4.0, "axis": 0, "period": 1.0},
            "task": {"name": "cell", "xi": [0.0, 1.0], "grid_n": 32, "problem": "periodic"},
            "solver": {"restarts": 1}
        }"#,
    );
    let out = afh(&["run", "--config", &cfg, "--out", "run1"], dir.path());
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("run1/summary.json")).unwrap())
            .unwrap();
    let normalized = summary["normalized"].as_f64().unwrap();
    assert!((normalized - 1.6).abs() <= 1e-3, "normalized {normalized}");
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("run1/manifest.json")).unwrap())
            .unwrap();
    assert!(manifest["config"]["task"]["name"] == "cell");
    assert!(manifest["resolved_seed"].is_u64());

    // identical reruns produce byte-identical summaries
    let out2 = afh(&["run", "--config", &cfg, "--out", "run2"], dir.path());
    assert!(out2.status.success());
    assert_eq!(
        fs::read(dir.path().join("run1/summary.json")).unwrap(),
        fs::read(dir.path().join("run2/summary.json")).unwrap()
    );
}

#[test]
fn unknown_config_keys_are_rejected_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.json",
        r#"{
            "operator": {"name": "div", "dim": 2, "p": 2.0},
            "task": {"name": "cell", "xi": [0.0, 1.0], "grid_n": 32, "bogus": 1}
        }"#,
    );
    let out = afh(&["run", "--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bogus"), "stderr should name the key: {err}");
}

#[test]
fn non_power_of_two_grids_are_rejected_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "grid.json",
        r#"{
            "operator": {"name": "div", "dim": 2, "p": 2.0},
            "integrand": {"kind": "quadratic", "a": 1.0},
            "task": {"name": "cell", "xi": [1.0, 0.0], "grid_n": 48}
        }"#,
    );
    let out = afh(&["run", "--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("power of two"));
}

#[test]
fn missing_integrand_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "noint.json",
        r#"{
            "operator": {"name": "div", "dim": 2, "p": 2.0},
            "task": {"name": "cell", "xi": [1.0, 0.0], "grid_n": 16}
        }"#,
    );
    let out = afh(&["run", "--config", &cfg], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("integrand"));
}

#[test]
fn stoch_task_emits_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "stoch.json",
        r#"{
            "operator": {"name": "div", "dim": 2, "p": 2.0},
            "integrand": {"kind": "random_checkerboard", "seed": 0,
                          "dist": {"values": [1.0, 4.0], "probs": [0.5, 0.5]}},
            "task": {"name": "stoch", "xi": [0.0, 1.0], "k": 4,
                     "radii": [1.0, 2.0], "seeds": [0, 1, 2], "density": 8},
            "solver": {"restarts": 0}
        }"#,
    );
    let out = afh(&["run", "--config", &cfg, "--out", "s"], dir.path());
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(dir.path().join("s/stoch.csv")).unwrap();
    // header + 3 seeds x 2 radii
    assert_eq!(csv.lines().count(), 7, "csv:\n{csv}");
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("s/summary.json")).unwrap())
            .unwrap();
    assert!(summary["mean"].as_f64().unwrap() > 0.0);
    assert_eq!(summary["per_omega_limits"].as_array().unwrap().len(), 3);
}

#[test]
fn selfcheck_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = afh(&["selfcheck"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 5);
    assert!(!text.contains("FAIL"), "selfcheck output:\n{text}");
}
