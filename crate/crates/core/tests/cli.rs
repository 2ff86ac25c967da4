//! End-to-end checks of the `aitool` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn aitool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aitool"))
        .args(args)
        .output()
        .expect("spawn aitool")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares stdout with a stored file; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) {
    let out = aitool(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected),
        "output differs from {name}"
    );
}

#[test]
fn golden_example1() {
    check_golden(
        "example1_analyze.json",
        &["analyze", "--format", "vector", "0011111100000011", "--certify=cor4", "--exact-ai=4"],
    );
    let v = json(&aitool(&["analyze", "--format", "vector", "0011111100000011", "--certify=cor4"]));
    let cert = &v["ai_lower_bounds"][0];
    assert_eq!(cert["method"], "COROLLARY4");
    assert_eq!(cert["bound"], 5);
    assert_eq!(cert["evidence"]["U"], 246);
}

#[test]
fn golden_example2() {
    check_golden("example2_construct.json", &["construct", "example2", "--n", "9", "--i", "2", "--emit", "vector"]);
}

#[test]
fn golden_example3() {
    check_golden("example3_analyze.json", &["analyze", "135E36F85E6CEA80", "--exact-ai"]);
    let v = json(&aitool(&["analyze", "135E36F85E6CEA80"]));
    assert_eq!(v["balanced"], true);
    assert_eq!(v["nonlinearity"], 24);
    assert_eq!(v["delta"], 40);
    assert_eq!(v["rotation_symmetric"], true);
}

#[test]
fn exit_codes() {
    let ok = aitool(&["analyze", "E8"]);
    assert_eq!(ok.status.code(), Some(0));

    let parse = aitool(&["analyze", "ZZ"]);
    assert_eq!(parse.status.code(), Some(1));
    assert_eq!(error_json(&parse)["error"], "PARSE");

    let mismatch = aitool(&["analyze", "--format", "vector", "0110", "--n", "4"]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert_eq!(error_json(&mismatch)["error"], "N_MISMATCH");

    let capped = aitool(&["analyze", "--format", "vector", "0000011111", "--exact-ai", "--budget", "1000"]);
    assert_eq!(capped.status.code(), Some(2));
    assert_eq!(error_json(&capped)["error"], "COST_LIMIT");

    let best_effort = aitool(&["analyze", "--format", "vector", "0000011111", "--budget", "1000"]);
    assert_eq!(best_effort.status.code(), Some(0));
    let v = json(&best_effort);
    assert!(v.get("ai_exact").is_none());
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w["code"] == "COST_CAP"));

    let too_big = aitool(&["scan", "exhaustive-n", "--n", "5"]);
    assert_eq!(too_big.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["scan", "random", "--n", "6", "--count", "50", "--seed", "7", "--check", "ai-upper,nl-bound"];
    let a = aitool(&args);
    let b = aitool(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = aitool(&["scan", "random", "--n", "6", "--count", "50", "--seed", "8", "--check", "ai-upper"]);
    assert_eq!(json(&other)["seed"], 8);
}

#[test]
fn file_and_stdin_input() {
    let direct = aitool(&["analyze", "--format", "anf", "--n", "3", "x1*x2 + x3"]);
    let dir = std::env::temp_dir().join(format!("aitool-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("f.anf");
    std::fs::write(&file, "x1*x2 + x3\n").unwrap();
    let arg = format!("@{}", file.display());
    let from_file = aitool(&["analyze", "--format", "anf", "--n", "3", &arg]);
    assert_eq!(from_file.stdout, direct.stdout);

    let mut child = Command::new(env!("CARGO_BIN_EXE_aitool"))
        .args(["analyze", "--format", "anf", "--n", "3", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x1*x2 + x3\n").unwrap();
    let from_stdin = child.wait_with_output().unwrap();
    assert_eq!(from_stdin.stdout, direct.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_output() {
    let out = aitool(&["analyze", "E8", "--output", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "weight: 4"));
    assert!(text.lines().any(|l| l == "balanced: true"));
}

#[test]
fn scans() {
    let v = json(&aitool(&["scan", "exhaustive-n", "--n", "4", "--check", "ai-oracle"]));
    assert_eq!(v["functions"], 65536);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);

    let v = json(&aitool(&["scan", "exhaustive-n", "--n", "3", "--check", "ai-upper"]));
    assert_eq!(v["max_ai_observed"], 2);

    let out = aitool(&["scan", "symmetric-n", "--n", "11", "--check", "cor4-sound"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["functions"], 4096);
}

#[test]
fn certify_commands() {
    let v = json(&aitool(&["certify", "thm2", "E8"]));
    assert_eq!(v["bound"], 0);
    let notes = v["evidence"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("vacuous")));

    let swap = json(&aitool(&["construct", "orbit-swap", "--n", "9", "--h", "1F", "--h-prime", "1"]));
    let hex = swap["function"].as_str().unwrap();
    assert_eq!(swap["balanced"], true);
    let closed = swap["certificate"]["bound"].as_u64().unwrap();
    let cov = json(&aitool(&["certify", "coverage", hex, "--symmetry", "rotation"]));
    assert!(cov["bound"].as_u64().unwrap() >= closed);

    let cor5 = json(&aitool(&["certify", "cor5", hex, "--h-size", "9"]));
    assert_eq!(cor5["bound"].as_u64().unwrap(), closed);
}
