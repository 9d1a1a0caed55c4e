//! Process-level CLI contract: exit codes, report files, determinism.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_galilei-lab"))
}

/// Small scenario so the CLI tests stay quick.
fn write_small_config(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, r#"{ "seed": 7, "elements": "random:300" }"#).unwrap();
    path
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = bin().arg("no-such-suite").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("unknown suite"), "{stderr}");
}

#[test]
fn malformed_config_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{ "sede": 7 }"#).unwrap();
    let out = bin()
        .args(["group-axioms", "--config"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("sede"), "{stderr}");
}

#[test]
fn invalid_config_value_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{ "grid": { "points": 100 } }"#).unwrap();
    let out = bin()
        .args(["group-axioms", "--config"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("grid.points"), "{stderr}");
}

#[test]
fn passing_suite_exits_zero_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_small_config(dir.path());
    let out_dir = dir.path().join("out");
    let out = bin()
        .args(["group-axioms", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report-group-axioms.json")).unwrap())
            .unwrap();
    assert_eq!(report["suite"], "group-axioms");
    assert_eq!(report["seed"], 7);
    assert_eq!(report["passed"], true);
    assert_eq!(report["config"]["elements"], "random:300");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("[PASS] associativity"), "{stdout}");
}

#[test]
fn failing_check_exits_one_but_still_reports() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_small_config(dir.path());
    let out_dir = dir.path().join("out");
    // An absurd global tolerance scale forces failures without touching
    // the physics.
    let out = bin()
        .args(["group-axioms", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out_dir)
        .args(["--tolerance-scale", "1e-12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report-group-axioms.json")).unwrap())
            .unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn reports_are_reproducible_modulo_timestamps() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_small_config(dir.path());
    let out_dir = dir.path().join("out");
    let mut reports = Vec::new();
    for _ in 0..2 {
        let out = bin()
            .args(["cocycle", "--config"])
            .arg(&config)
            .arg("--out")
            .arg(&out_dir)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let mut report: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(out_dir.join("report-cocycle.json")).unwrap(),
        )
        .unwrap();
        report["timestamp"] = 0.into();
        report["wall_ms"] = 0.into();
        reports.push(serde_json::to_string(&report).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn seed_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_small_config(dir.path());
    let out_dir = dir.path().join("out");
    let out = bin()
        .args(["cocycle", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out_dir)
        .args(["--seed", "99"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report-cocycle.json")).unwrap())
            .unwrap();
    assert_eq!(report["seed"], 99);
}
