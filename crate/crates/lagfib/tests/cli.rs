//! End-to-end tests of the `lagfib` binary: pinned output strings, exit
//! codes, format handling, and bit-exact golden files for the census
//! exports.

use std::path::Path;
use std::process::{Command, Output};

fn lagfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let output = lagfib(args);
    assert!(
        output.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("utf-8 output")
}

#[test]
fn series_pinned_output() {
    assert_eq!(
        stdout_of(&[
            "series",
            "--genus",
            "sqrt-ahat",
            "--upto",
            "4",
            "--c-odd-zero"
        ]),
        "1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4\n"
    );
    assert_eq!(
        stdout_of(&["series", "--genus", "ahat", "--upto", "4", "--c-odd-zero"]),
        "1 + 1/12*c2 + 1/240*c2^2 - 1/720*c4\n"
    );
}

#[test]
fn series_rejects_small_upto() {
    let output = lagfib(&["series", "--genus", "ahat", "--upto", "0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn series_json_schema() {
    let json = stdout_of(&[
        "series",
        "--genus",
        "sqrt-ahat",
        "--upto",
        "4",
        "--c-odd-zero",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["genus"], "sqrt-ahat");
    assert_eq!(doc["series"], "1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4");
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(terms[0]["monomial"], "1");
    assert_eq!(terms[1]["monomial"], "c2");
    assert_eq!(terms[1]["coefficient"], "1/24");
    assert_eq!(terms[2]["monomial"], "c2.c2");
    assert_eq!(terms[3]["coefficient"], "-1/1440");
}

#[test]
fn degdelta_examples() {
    let out = stdout_of(&[
        "degdelta",
        "--n",
        "2",
        "--polarization",
        "1,1",
        "--sqrt-ahat",
        "25/32",
    ]);
    assert!(out.contains("deg_delta = 30\n"), "got: {out}");
    assert!(out.contains("b_theta = 3600\n"));
    let out = stdout_of(&[
        "degdelta",
        "--n",
        "2",
        "--polarization",
        "1,3",
        "--sqrt-ahat",
        "27/32",
    ]);
    assert!(out.contains("deg_delta = 18\n"), "got: {out}");
}

#[test]
fn degdelta_not_perfect_power_exits_2() {
    let output = lagfib(&[
        "degdelta",
        "--n",
        "2",
        "--polarization",
        "1,1",
        "--sqrt-ahat",
        "1/7",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("NotPerfectPower"), "stderr: {stderr}");
}

#[test]
fn degdelta_rejects_broken_chain() {
    let output = lagfib(&[
        "degdelta",
        "--n",
        "2",
        "--polarization",
        "2,3",
        "--sqrt-ahat",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn degdelta_loads_chern_record() {
    let dir = std::env::temp_dir().join("lagfib-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s2.json");
    std::fs::write(
        &path,
        r#"{"name":"S[2]","complex_dimension":4,"chern_numbers":{"c2.c2":828,"c4":324}}"#,
    )
    .unwrap();
    let out = stdout_of(&[
        "degdelta",
        "--n",
        "2",
        "--polarization",
        "1,1",
        "--sqrt-ahat",
        path.to_str().unwrap(),
    ]);
    assert!(out.contains("deg_delta = 30\n"), "got: {out}");
}

#[test]
fn census_csv_matches_golden_file() {
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/census.csv"),
    )
    .unwrap();
    assert_eq!(stdout_of(&["census", "--format", "csv"]), golden);
}

#[test]
fn census_json_matches_golden_file() {
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/census.json"),
    )
    .unwrap();
    assert_eq!(stdout_of(&["census", "--format", "json"]), golden);
}

#[test]
fn census_contains_known_examples() {
    let csv = stdout_of(&["census", "--format", "csv"]);
    assert!(csv.contains("23,0,276,324,828,900,1,30\n"));
    assert!(csv.contains("7,8,108,108,756,972,3,18\n"));
    // no b2 = 3 row
    assert!(!csv.lines().skip(1).any(|line| line.starts_with("3,")));
}

#[test]
fn census_summary_reports_bounds() {
    let plain = stdout_of(&["census"]);
    let summary = plain.lines().last().unwrap();
    assert!(summary.contains("max_rw=1036"), "summary: {summary}");
    assert!(summary.contains("deg_delta <= 32, d <= 1036"));
    let loose = stdout_of(&["census", "--no-require-integer-degree"]);
    let summary = loose.lines().last().unwrap();
    assert!(summary.contains("max_d=1036"), "summary: {summary}");
}

#[test]
fn census_json_filter_by_b2() {
    let json = stdout_of(&["census", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let hits: Vec<&serde_json::Value> = rows
        .iter()
        .filter(|r| r["b2"] == 23 && r["d"] == 1)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["deg_delta"], 30);
}

#[test]
fn census_determinism_across_runs() {
    let first = stdout_of(&["census", "--format", "csv"]);
    let second = stdout_of(&["census", "--format", "csv"]);
    assert_eq!(first, second);
}

#[test]
fn pencil_examples() {
    let out = stdout_of(&["pencil", "--surface", "k3", "--n", "2"]);
    assert!(out.contains("pencil_degree = 30\n"), "got: {out}");
    let out = stdout_of(&["pencil", "--surface", "abelian", "--n", "2"]);
    assert!(out.contains("pencil_degree = 18\n"), "got: {out}");
    let out = stdout_of(&["pencil", "--surface", "abelian", "--n", "1"]);
    assert!(out.contains("pencil_degree = 12\n"), "got: {out}");
}

#[test]
fn models_examples() {
    let out = stdout_of(&["models", "--polarization", "1,3"]);
    assert_eq!(out, "k=1 d_prime=(3)\nk=3 d_prime=(1)\ntotal: 2 models\n");
    let out = stdout_of(&["models", "--polarization", "2,4", "--format", "csv"]);
    assert_eq!(out, "k,d_prime\n1,8\n2,4\n4,2\n");
}

#[test]
fn unsupported_format_exits_2() {
    let output = lagfib(&[
        "series", "--genus", "ahat", "--upto", "4", "--format", "csv",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("lagfib-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.txt");
    let _ = std::fs::remove_file(&path);
    let out = stdout_of(&[
        "series",
        "--genus",
        "sqrt-ahat",
        "--upto",
        "4",
        "--c-odd-zero",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4\n"
    );
}
