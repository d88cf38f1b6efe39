use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sl3ext::json::{mat2_from_json, mat3_from_json};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/v1").join(name)
}

fn sl3ext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3ext")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn input(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn simple_extend_golden() {
    let out = sl3ext(&["simple-extend", "--input", &input("double_primes.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "simple");
    let ext = mat3_from_json(&v["extension"], None).unwrap();
    let a = mat2_from_json(
        &serde_json::from_str(&std::fs::read_to_string(fixture("double_primes.json")).unwrap()).unwrap(),
        None,
    )
    .unwrap();
    assert_eq!(ext.theta(), a);
    assert_eq!(ext.det(), a.ring().one());
}

#[test]
fn extend_full_matrix() {
    let out = sl3ext(&["extend", "--input", &input("full_zquad5.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "not_extendable");
    assert_eq!(v["witness"]["kind"], "full_proof");
    assert_eq!(v["witness"]["divisors"].as_array().unwrap().len(), 2);
}

#[test]
fn extend_lifts() {
    let out = sl3ext(&["extend", "--input", &input("lift_7_11.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_json(&out)["extension"].is_object());
}

#[test]
fn localized_input() {
    let out = sl3ext(&["simple-extend", "--input", &input("upper_triangular_zloc21.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["status"], "simple");
}

#[test]
fn input_errors_exit_1() {
    let out = sl3ext(&["simple-extend", "--input", &input("non_unimodular.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not unimodular") && err.contains("\"2\""), "{err}");

    let dir = std::env::temp_dir();
    let bad = dir.join(format!("sl3ext-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"ring\": {\"kind\": \"Z\"}, \"rows\": [[1, 2], [3").unwrap();
    let out = sl3ext(&["extend", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));

    std::fs::write(&bad, r#"{"ring": {"kind": "Zp", "p": 5}, "rows": [[1, 0], [0, 1]]}"#).unwrap();
    let out = sl3ext(&["extend", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown ring kind"));
    std::fs::remove_file(&bad).unwrap();

    let out = sl3ext(&["extend", "--input", &input("missing.json")]);
    assert_eq!(out.status.code(), Some(1));
    let out = sl3ext(&["extend", "--input", &input("double_primes.json"), "--bound", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sl3ext(&["extend", "--input", &input("double_primes.json"), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sl3ext(&["classify-ring", "--sweep", "7..3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    assert_eq!(sl3ext(&["--help"]).status.code(), Some(0));
    assert_eq!(sl3ext(&["--version"]).status.code(), Some(0));
}

#[test]
fn ring_override() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("sl3ext-noring-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"rows": [["2", "3"], ["3", "2"]]}"#).unwrap();
    let out = sl3ext(&["simple-extend", "--input", path.to_str().unwrap(), "--ring", r#"{"kind":"Zmod","n":6}"#]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["extension"]["ring"]["kind"], "Zmod");
}

#[test]
fn reduce_diagonalises() {
    let out = sl3ext(&["reduce", "--input", &input("double_primes.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["diagonal"]["rows"], serde_json::json!([["1", "0"], ["0", "150"]]));
    assert_eq!(v["extension"]["rows"][2][2], "0");

    let out = sl3ext(&["reduce", "--input", &input("double_primes.json"), "--modulus", "\"4\""]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["reduced"]["rows"], serde_json::json!([["3", "2"], ["2", "2"]]));
    assert_eq!(v["reduced"]["ring"], serde_json::json!({"kind": "Zmod", "n": "4"}));
}

#[test]
fn nu_outputs() {
    let out = sl3ext(&["nu", "--input", &input("diag_7_11.json"), "--bound", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["bound"], 6);
    assert!(v["values"].as_array().unwrap().iter().all(|x| x.as_str().unwrap().parse::<i64>().unwrap() % 4 == 0));

    let out = sl3ext(&["nu", "--input", &input("diag_7_11.json"), "--bound", "6", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("e,f,s,t,nu"));
    assert_eq!(lines.count(), v["gamma"].as_array().unwrap().len());
}

#[test]
fn classify_matrix_reports_fullness() {
    let out = sl3ext(&["classify-matrix", "--input", &input("nonfull_z6.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["det_kind"], "zero");
    assert_eq!(v["fullness"]["kind"], "factorization");
    assert_eq!(v["simple_extend"]["status"], "simple");

    let out = sl3ext(&["classify-matrix", "--input", &input("full_zquad13.json")]);
    let v = stdout_json(&out);
    assert_eq!(v["det_kind"], "zero");
    assert_eq!(v["fullness"]["kind"], "full_proof");
    assert_eq!(v["extend"]["status"], "not_extendable");
}

#[test]
fn classify_ring_outputs() {
    let out = sl3ext(&["classify-ring", "--input", &input("quot_ring.json"), "--th2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["size"], 6);
    assert_eq!(v["se2"], true);
    assert_eq!(v["th2"]["holds"], true);
    assert!(v["counterexample"].is_null());

    let out = sl3ext(&["classify-ring", "--sweep", "2..5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n,sr1,fsr15,asr1,pi2,e2,se2\n2,true,true,true,true,true,true\n3,true,true,true,true,true,true\n4,true,true,true,true,true,true\n5,true,true,true,true,true,true\n");

    let out = sl3ext(&["classify-ring", "--ring", r#"{"kind":"Zmod","n":"80"}"#]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn verify_is_byte_stable() {
    let first = sl3ext(&["verify", "--seed", "7", "--sweep", "2..6"]);
    let second = sl3ext(&["verify", "--seed", "7", "--sweep", "2..6"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.ends_with("12/12 passed\n"), "{text}");
    assert!(!text.contains("FAIL"));

    let json = sl3ext(&["verify", "--format", "json", "--sweep", "2..3"]);
    let v = stdout_json(&json);
    assert_eq!(v.as_array().unwrap().len(), 12);
}
