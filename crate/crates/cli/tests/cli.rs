use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cngroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("e2.json");
    let out = run(&["construct", "example2", "m=3", "k=2", "-o", path(&spec)]);
    assert_eq!(out.status.code(), Some(0));

    let first = run(&["analyze", path(&spec), "--seed", "7"]);
    assert_eq!(first.status.code(), Some(0));
    let report = json(&first);
    assert_eq!(report["case"], "FrobeniusQuotient");
    assert_eq!(report["seed"], 7);
    assert_eq!(report["is_cn"], true);

    let second = run(&["analyze", path(&spec), "--seed", "7"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_an_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["verify", path(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["total"], 0);
}

#[test]
fn verify_exported_specs() {
    let dir = tempfile::tempdir().unwrap();
    for (family, params) in [("example2", vec!["m=3", "k=4"]), ("example1", vec!["K=C4", "p=5"])] {
        let file = dir.path().join(format!("{family}.json"));
        let mut args = vec!["construct", family];
        args.extend(params);
        args.extend(["-o", path(&file)]);
        assert_eq!(run(&args).status.code(), Some(0));
    }
    let out = run(&["verify", path(dir.path()), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["summary"]["total"], 2);
    assert_eq!(doc["summary"]["violations"], 0);
    assert_eq!(doc["summary"]["cn_count"], 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "kind": "perm", "degree": 3, "generators": ["(1,5)"]}"#).unwrap();
    assert_eq!(run(&["analyze", path(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["construct", "example2", "m"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn resource_bounds_exit_with_three() {
    let out = run(&["construct", "example2", "m=5", "k=4", "--max-order", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-order"));
}
