use assert_cmd::Command;
use predicates::prelude::*;
use std::path::Path;

fn ternion() -> Command {
    Command::cargo_bin("ternion").unwrap()
}

fn export(dir: &Path) {
    ternion().args(["fixtures", "export"]).arg(dir).assert().success();
}

fn report_json(args: &[&str], data: Option<&Path>) -> serde_json::Value {
    let mut cmd = ternion();
    cmd.arg("verify").args(args).args(["--format", "json"]);
    if let Some(d) = data {
        cmd.arg("--data").arg(d);
    }
    let out = cmd.output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_roots_and_norm_pass() {
    ternion().args(["verify", "roots"]).assert().code(0);
    ternion().args(["verify", "norm"]).assert().code(0);
    ternion().args(["verify", "su3"]).assert().code(0);
}

#[test]
fn verify_all_reports_failing_sections() {
    ternion()
        .args(["verify", "all", "--format", "md"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("| FAIL |"));
}

#[test]
fn corrupted_fixture_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    std::fs::write(dir.path().join("roots_alpha.json"), "[1, 2").unwrap();
    ternion()
        .args(["verify", "all", "--data"])
        .arg(dir.path())
        .assert()
        .code(2)
        .stderr(predicate::str::contains("roots_alpha.json"));
}

#[test]
fn missing_fixture_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    ternion().args(["verify", "roots", "--data"]).arg(dir.path()).assert().code(2);
}

#[test]
fn verify_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        ternion().args(["verify", "all", "--out"]).arg(p).assert().code(1);
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn checksums_follow_fixture_bytes() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let before = report_json(&["roots"], Some(dir.path()));
    let path = dir.path().join("surface_poly.json");
    let mut text = std::fs::read_to_string(&path).unwrap();
    text.push('\n');
    std::fs::write(&path, text).unwrap();
    let after = report_json(&["roots"], Some(dir.path()));
    let sum = |v: &serde_json::Value| v["body"]["fixtures"]["checksums"]["surface_poly.json"].clone();
    assert!(sum(&before).is_string());
    assert_ne!(sum(&before), sum(&after));
}

#[test]
fn diff_table_exit_codes() {
    ternion().args(["diff-table", "--basis", "tu3"]).assert().code(0);
    ternion().args(["diff-table", "--basis", "nonion"]).assert().code(1);
    ternion()
        .args(["diff-table", "--basis", "nonion", "--fixture", "/nonexistent/table.json"])
        .assert()
        .code(2);
}

#[test]
fn bracket_prints_structure_constants() {
    ternion()
        .args(["bracket", "1", "2", "3", "--basis", "tu3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("Q0"));
    ternion().args(["bracket", "1", "2", "9"]).assert().code(2);
}

#[test]
fn table_markdown_has_84_rows() {
    let out = ternion().args(["table", "--basis", "nonion"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("| {")).count(), 84);
}

#[test]
fn norm_of_identity_is_one() {
    ternion()
        .args(["norm", "--coords", "1,0,0,0,0,0,0,0,0"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"exact\": \"1\""));
    ternion().args(["norm", "--coords", "1/0,0,0,0,0,0,0,0,0"]).assert().code(2);
}

#[test]
fn clifford_subcommands() {
    ternion()
        .args(["clifford", "dim", "6"])
        .assert()
        .success()
        .stdout(predicate::str::contains("729"));
    ternion()
        .args(["clifford", "mul", "q1", "q1^2", "--n", "2"])
        .assert()
        .success()
        .stdout("1\n");
    ternion().args(["clifford", "dim", "13"]).assert().code(2);
}

#[test]
fn roots_rotate_cycles_alpha() {
    let out = ternion()
        .args(["roots", "rotate", "--vector", "alpha1", "--power", "3"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let again = ternion()
        .args(["roots", "rotate", "--vector", "alpha1", "--power", "0"])
        .output()
        .unwrap();
    let w: serde_json::Value = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(v["result"], w["result"]);
}

#[test]
fn usage_errors_exit_two() {
    ternion().arg("frobnicate").assert().code(2);
    ternion().args(["verify", "everything"]).assert().code(2);
}
