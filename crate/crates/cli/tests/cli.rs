use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_satake-gl2"));
    c.env_remove("SATAKE_GL2_OUT_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn compute_s_set() {
    let out = run(&["compute", "s-set", "--lam", "2", "--mu", "0"]);
    assert!(out.status.success());
    assert_eq!(json_stdout(&out), serde_json::json!({"set": [-2, 0, 2]}));
}

#[test]
fn compute_point_stalk() {
    let out = run(&["compute", "stalk", "--k", "1", "--lam", "1,0", "--m", "0", "--l", "-2"]);
    assert!(out.status.success());
    assert_eq!(json_stdout(&out), serde_json::json!({"kind": "point", "shift": 2}));
}

#[test]
fn compute_zero_hom() {
    let out = run(&["compute", "hom", "--source", "0,0", "--target", "0,2"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["is_zero"], true);
    assert_eq!(v["hilbert_series"], serde_json::json!([]));
}

#[test]
fn compute_hom_series_and_annihilator() {
    let out = run(&["compute", "hom", "--source", "1,1", "--target", "2,0", "--max-degree", "5"]);
    let v = json_stdout(&out);
    assert_eq!(v["generator_degree"], 1);
    assert_eq!(v["hilbert_series"], serde_json::json!([[1, 1], [3, 2], [5, 2]]));
    // c^2 - 2ac, as [a_exp, c_exp, num, den] quadruples.
    assert_eq!(v["annihilator"], serde_json::json!([[0, 2, 1, 1], [1, 1, -2, 1]]));
}

#[test]
fn compute_rejects_invalid_input() {
    assert_eq!(run(&["compute", "s-set", "--lam", "1", "--mu", "0"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "orbit", "--m", "0", "--l", "1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "stalk", "--k", "1", "--lam", "x", "--m", "0", "--l", "0"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "invariants"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "nonsense"]).status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(run(&["verify", "unknown-suite"]).status.code(), Some(2));
}

#[test]
fn bad_configuration_is_a_usage_error() {
    assert_eq!(run(&["verify", "stalks", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "stalks", "--k-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "stalks", "--k-max", "4", "--primes", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "annihilators", "--lam-max", "-1"]).status.code(), Some(2));
}

#[test]
fn unwritable_output_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain-file");
    std::fs::write(&file, "x").unwrap();
    let target = file.join("report.json");
    let out = run(&["verify", "koszul", "--lam-max", "1", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn annihilators_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ann.json");
    let out = run(&["verify", "annihilators", "--lam-max", "6", "--mu-bound", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(&path);
    assert_eq!(v["suite"], "annihilators");
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["cases"], v["cases"].as_array().unwrap().len());
}

#[test]
fn hom_agreement_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hom.json");
    let out = run(&[
        "verify", "hom-agreement", "--lam-max", "2", "--mu-bound", "2", "--max-degree", "20", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(&path);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["config"]["max_degree"], 20);
}

#[test]
fn every_suite_passes_on_small_bounds() {
    for suite in ["orbits", "stalks", "coherent-side", "invariant-theory", "koszul"] {
        let out = run(&["verify", suite, "--lam-max", "2", "--mu-bound", "2", "--k-max", "2", "--primes", "3,5"]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json_stdout(&out)["summary"]["failed"], 0, "{suite}");
    }
}

#[test]
fn reports_are_deterministic_across_runs_and_job_counts() {
    let args = ["verify", "stalks", "--lam-max", "2", "--mu-bound", "2", "--k-max", "2", "--primes", "3,5"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    let again = run(&[&args[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn csv_report_has_fixed_columns() {
    let out = run(&["verify", "koszul", "--lam-max", "1", "--format", "csv"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(&out.stdout[..]);
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["suite", "case_id", "inputs", "expected", "computed", "pass"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| &r[0] == "koszul" && &r[5] == "true"));
}

#[test]
fn output_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["verify", "orbits", "--lam-max", "2", "--mu-bound", "2", "--format", "csv"])
        .env("SATAKE_GL2_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("orbits.csv")).unwrap();
    assert!(text.starts_with("suite,case_id,inputs,expected,computed,pass"));
}
