//! End-to-end coverage of the `bisectors` binary: formats, flags and exit
//! codes.


use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bisectors"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_writes_the_documented_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.pts");
    let out = bin()
        .args(["gen", "--out"])
        .arg(&path)
        .args(["line", "--n", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "0 0\n1 0\n2 0\n3 0\n4 0\n");
}

#[test]
fn gen_without_out_prints_to_stdout() {
    let out = run(&["gen", "grid", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 0\n0 1\n1 0\n1 1\n");
}

#[test]
fn stats_on_generated_line_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.pts");
    assert!(bin()
        .args(["gen", "--out"])
        .arg(&path)
        .args(["line", "--n", "5"])
        .status()
        .unwrap()
        .success());
    let out = bin().arg("stats").arg(&path).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["distinct_bisectors"], 7);
    assert_eq!(value["max_collinear"], 5);
    assert_eq!(value["max_cocircular"], 2);
}

#[test]
fn stats_flags_control_cocircularity_and_rich_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.pts");
    assert!(bin()
        .args(["gen", "--out"])
        .arg(&path)
        .args(["grid", "--k", "3"])
        .status()
        .unwrap()
        .success());
    let out = bin()
        .arg("stats")
        .arg(&path)
        .args(["--json", "--no-cocircular", "--rich", "3,4"])
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(value["max_cocircular"].is_null());
    assert_eq!(value["rich_lines"]["3"], 8);
    assert_eq!(value["rich_lines"]["4"], 0);
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pts");
    std::fs::write(&path, "0 0\n1 1\n1 1\n").unwrap();
    let out = bin().arg("stats").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr was {err:?}");
}

#[test]
fn audit_respects_caps_and_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.pts");
    std::fs::write(&path, "1 0\n0 1\n-1 0\n0 -1\n").unwrap();
    let out = bin().arg("audit").arg(&path).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["violations"].as_array().unwrap().len(), 0);
    let audits = value["audits"].as_array().unwrap();
    assert_eq!(audits.len(), 3);
    assert!(audits.iter().all(|a| a["passed"] == true));

    // An oversized set against a small cap is an I/O-class failure, not a
    // violation.
    let big = dir.path().join("big.pts");
    let text: String = (0..30).map(|i| format!("{i} {}\n", i * i)).collect();
    std::fs::write(&big, text).unwrap();
    let out = bin()
        .arg("audit")
        .arg(&big)
        .args(["--cap", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_rows_reproduce_stats_and_sort_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("scan.csv");
    let out = bin()
        .args(["scan", "--family", "ellipse-train", "--m", "8", "--sizes", "32,16"])
        .args(["--out"])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    // Sorted by n despite the reversed --sizes order.
    assert!(lines[1].starts_with("ellipse-train,16,8,"));
    assert!(lines[2].starts_with("ellipse-train,32,8,"));

    // The energy column of a row equals the stats report of the same spec.
    let pts = dir.path().join("et16.pts");
    assert!(bin()
        .args(["gen", "--out"])
        .arg(&pts)
        .args(["ellipse-train", "--n", "16", "--m", "8"])
        .status()
        .unwrap()
        .success());
    let stats = bin().arg("stats").arg(&pts).arg("--json").output().unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&stats)).unwrap();
    let energy_from_row: u64 = lines[1].split(',').nth(3).unwrap().parse().unwrap();
    assert_eq!(value["energy"].as_u64().unwrap(), energy_from_row);
}

#[test]
fn scan_requires_m_for_the_ellipse_family() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("scan.csv");
    let out = bin()
        .args(["scan", "--family", "ellipse-train", "--sizes", "16,32"])
        .args(["--out"])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
