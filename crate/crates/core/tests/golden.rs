mod common;

use std::process::{Command, Output};

use serde_json::{json, Value};

use common::{ms, GOLDEN};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genhooks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn golden(name: &str) {
    let (_, check) = GOLDEN
        .iter()
        .find(|(n, _)| *n == name)
        .expect("known example");
    if let Err(msg) = check() {
        panic!("{name}: {msg}");
    }
}

#[test]
fn worked_partition() {
    golden("worked_partition");
}

#[test]
fn scaling_and_shifting() {
    golden("scaling_and_shifting");
}

#[test]
fn charged_scaled_set() {
    golden("charged_scaled_set");
}

#[test]
fn symbols_of_multipartitions() {
    golden("symbols_of_multipartitions");
}

#[test]
fn hook_predicates() {
    golden("hook_predicates");
}

#[test]
fn hook_multisets() {
    golden("hook_multisets");
}

#[test]
fn dt_cores() {
    golden("dt_cores");
}

#[test]
fn a_values() {
    golden("a_values");
}

#[test]
fn core_example_specialisation() {
    golden("core_example_specialisation");
}

#[test]
fn cli_core_output_is_exact() {
    let out = run(&["core", "--partition", "[3,2,1,1,1]", "--e", "3"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"core":[1,1],"quotient":[[],[1],[1]],"multicharge":[3,1,2]}"#
    );
}

#[test]
fn cli_cj_hook_lengths() {
    let v = run_json(&["hooks", "--symbol", "[[0,5],[0,1,4]]", "--kind", "cj"]);
    let lengths: Vec<i64> = serde_json::from_value(v["lengths"].clone()).expect("lengths array");
    assert_eq!(
        common::ms(&lengths),
        ms(&[1, 1, 2, 2, 3, 4, -1, 0, 2, 3, 2, 3])
    );
}

#[test]
fn cli_verify_main_theorem() {
    let out = run(&[
        "verify",
        "--theorem",
        "mainTypeA",
        "--nmax",
        "8",
        "--e",
        "2..4",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failures"], json!([]));
}

#[test]
fn cli_verify_is_deterministic() {
    let args = [
        "verify",
        "--theorem",
        "injection",
        "--count",
        "50",
        "--seed",
        "9",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn cli_exit_codes() {
    assert_eq!(
        run(&["core", "--partition", "[1,2]", "--e", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["core", "--partition", "[1,", "--e", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--theorem", "nonsense"]).status.code(),
        Some(1)
    );
    let err = run(&["core", "--partition", "[1,2]", "--e", "3"]);
    let v: Value = serde_json::from_slice(&err.stderr).expect("error json on stderr");
    assert_eq!(v["error"], json!("NotWeaklyDecreasing"));
}
