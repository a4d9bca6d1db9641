use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn schurlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurlab")).args(args).output().expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schurlab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn multiplier_of(name: &str, spec: &str) -> Value {
    let path = temp_file(name, spec);
    let o = schurlab(&["multiplier", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout_json(&o)["multiplier"].clone()
}

#[test]
fn multiplier_of_cyclic_is_trivial() {
    assert_eq!(multiplier_of("z6.json", r#"{"kind":"cyclic","n":6}"#), serde_json::json!([]));
}

#[test]
fn multiplier_of_extraspecial_32() {
    let v = multiplier_of("e32.json", r#"{"kind":"extraspecial","p":2,"n":2}"#);
    assert_eq!(v, serde_json::json!([2, 2, 2, 2, 2]));
}

#[test]
fn multiplier_of_e27_times_z3() {
    let spec = r#"{"kind":"direct","factors":[{"kind":"extraspecial","p":3,"n":1},{"kind":"cyclic","n":3}]}"#;
    assert_eq!(multiplier_of("ex1.json", spec), serde_json::json!([3, 3, 3, 3]));
}

#[test]
fn modulus_flag_reports_h2() {
    let path = temp_file("v4.json", r#"{"kind":"abelian","factors":[2,2]}"#);
    let o = schurlab(&["multiplier", path.to_str().unwrap(), "--modulus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["h2"], serde_json::json!([2, 2, 2]));
}

#[test]
fn malformed_spec_exits_2() {
    for (name, text) in [("bad1.json", "{\"kind\":"), ("bad2.json", r#"{"kind":"dihedral","order":9}"#)] {
        let path = temp_file(name, text);
        assert_eq!(schurlab(&["multiplier", path.to_str().unwrap()]).status.code(), Some(2), "{text}");
    }
    assert_eq!(schurlab(&["multiplier", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn oversized_group_exits_3() {
    let path = temp_file("big.json", r#"{"kind":"cyclic","n":1000}"#);
    assert_eq!(schurlab(&["build", path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn flags_are_validated() {
    assert_eq!(schurlab(&["verify", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(schurlab(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn build_prints_canonical_table() {
    let path = temp_file("z3.json", r#"{"kind":"cyclic","n":3}"#);
    let o = schurlab(&["build", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["order"], 3);
    assert_eq!(v["table"], serde_json::json!([3, 0, 1, 2, 1, 2, 0, 2, 0, 1]));
}

#[test]
fn oracle_suite_passes_and_report_round_trips() {
    let out = temp_file("oracle.json", "");
    let o = schurlab(&["verify", "--suite", "oracle", "--jobs", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports = stdout_json(&o);
    assert!(reports.as_array().unwrap().len() >= 30);
    assert!(reports.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));

    let saved = fs::read_to_string(&out).unwrap();
    let again = schurlab(&["report", out.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(String::from_utf8(again.stdout).unwrap().trim_end(), saved);
}

#[test]
fn instance_verification() {
    let path = temp_file(
        "d8q8.json",
        r#"{"kind":"central","left":{"kind":"dihedral","order":8},"right":{"kind":"quaternion"}}"#,
    );
    let o = schurlab(&["verify", "--instance", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let claims: Vec<String> =
        stdout_json(&o).as_array().unwrap().iter().map(|r| r["claim"].as_str().unwrap().to_string()).collect();
    assert!(claims.contains(&"theorem-b".to_string()) && claims.contains(&"diagram".to_string()));
}

#[test]
fn exit_code_follows_verdicts() {
    let failing =
        r#"[{"claim":"theorem-b","instance":"x","computed":{},"checks":{"a":false},"verdict":"fail","ms":0}]"#;
    let path = temp_file("failing.json", failing);
    let o = schurlab(&["report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("failed: theorem-b"));

    let passing = failing.replace("false", "true").replace("\"fail\"", "\"isomorphism\"");
    let path = temp_file("passing.json", &passing);
    assert_eq!(schurlab(&["report", path.to_str().unwrap()]).status.code(), Some(0));

    let path = temp_file("garbage.json", "[{\"claim\":1}]");
    assert_eq!(schurlab(&["report", path.to_str().unwrap()]).status.code(), Some(2));
}
