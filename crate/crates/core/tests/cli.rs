use std::path::Path;
use std::process::Command;

use aw_nevanlinna::cli::{run, Cli, EXIT_HYPOTHESIS, EXIT_USAGE};
use aw_nevanlinna::decomp::TABLE1_GOLDEN;
use clap::Parser;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_awnev"));
    c.env_remove("AWNEV_CONFIG");
    c
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run_args(args: &[&str]) -> (String, i32) {
    let cli = Cli::parse_from(std::iter::once("awnev").chain(args.iter().copied()));
    let out = run(&cli).unwrap();
    (out.stdout, out.code)
}

#[test]
fn ops_dq_of_square() {
    let (out, code) = run_args(&["ops", "--expr", "x^2", "--op", "dq", "--s", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "5/2 * x");
}

#[test]
fn params_spot_value() {
    let (out, code) = run_args(&["params", "--n", "1", "--dhat", "1", "--alpha", "1", "--eps", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["N"].as_str(), v["M"].as_str(), v["Omega"].as_str()), (Some("18"), Some("19"), Some("153")));
}

#[test]
fn decompose_reproduces_stage_table() {
    let (out, code) = run_args(&["decompose", "--degrees", "6,5,5,5,5,5,3,2,2,1", "--bins", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("13"));
    assert!(out.contains(TABLE1_GOLDEN.trim_end()));
}

#[test]
fn table1_matches_golden() {
    let out = bin().arg("table1").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = run_args(&["smt", "--input", &data("smt_truncated_conic.json")]);
    let b = run_args(&["smt", "--input", &data("smt_truncated_conic.json")]);
    assert_eq!(a, b);
    assert_eq!(a.1, 0);
}

#[test]
fn usage_error_exit_code() {
    let out = bin().arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = bin().args(["ops", "--op", "dq"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn hypothesis_failure_exit_code() {
    let out = bin().args(["smt", "--input", &data("smt_hypothesis_fail.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_HYPOTHESIS), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bad_expression_is_a_computation_error() {
    let out = bin().args(["ops", "--expr", "x^-1", "--op", "dq"]).output().unwrap();
    let code = out.status.code().unwrap();
    assert!(code != 0 && code != EXIT_USAGE);
}

#[test]
fn smt_binary_emits_parseable_json() {
    let out = bin().args(["smt", "--input", &data("smt_general_conic.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"]["pass"], serde_json::Value::Bool(true));
}

#[test]
fn config_file_overridden_by_flags() {
    let dir = std::env::temp_dir().join(format!("awnev-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("awnev.conf");
    std::fs::write(&cfg, "s = 1/3\n").unwrap();
    let from_file = bin().args(["ops", "--expr", "x^2", "--op", "dq"]).env("AWNEV_CONFIG", &cfg).output().unwrap();
    let flagged = bin()
        .args(["ops", "--expr", "x^2", "--op", "dq", "--s", "1/2"])
        .env("AWNEV_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&flagged.stdout).trim(), "5/2 * x");
    assert_ne!(from_file.stdout, flagged.stdout);
}
