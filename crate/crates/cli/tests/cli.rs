//! End-to-end checks of the binary: exit codes, record schema, formats.

use std::process::{Command, Output};

fn tricon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricon"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn list_claims_prints_catalog() {
    let out = tricon(&["list-claims"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 21, "catalog has at least 21 entries");
    for id in ["thm1", "thm2", "thm3", "wolst", "sigma3"] {
        assert!(text.contains(id), "catalog lists {id}");
    }
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = tricon(&["verify", "--claims", "thm1,thm2,thm3", "--primes", "5..97"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid json per line");
        assert_eq!(v["pass"], serde_json::Value::Bool(true));
        assert!(v["lhs"].is_string());
    }
    // key order is part of the report format
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("{\"type\":\"congruence\",\"id\":\"thm1\",\"p\":5,"));
}

#[test]
fn failing_claim_exits_one() {
    let out = tricon(&[
        "verify",
        "--claims",
        "wolst",
        "--primes",
        "3..3",
        "--include-small-primes",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(false));
    assert_eq!(v["lhs"], "10");
    assert_eq!(v["rhs"], "1");
    assert_eq!(v["modulus"], "3^3");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tricon(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        tricon(&["verify", "--claims", "not-a-claim"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tricon(&["verify", "--primes", "10..5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tricon(&["verify", "--primes", "1..50"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tricon(&["verify", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(tricon(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_format_has_header_and_rows() {
    let out = tricon(&[
        "verify",
        "--claims",
        "thm3",
        "--primes",
        "7..7",
        "--m-set",
        "2,3",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "type,id,p,params,modulus,lhs,rhs,pass,micros");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("congruence,thm3,7,m=2,7^2,"));
}

#[test]
fn identities_subcommand_small_grid() {
    let out = tricon(&[
        "identities",
        "--grid-lemmas",
        "6",
        "--grid-integral",
        "4",
        "--grid-certificate",
        "3",
        "--grid-forms",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["type"], "identity");
        assert_eq!(v["pass"], serde_json::Value::Bool(true));
        assert!(v["p"].is_null());
        assert!(v["modulus"].is_null());
    }
    assert!(text.lines().count() > 100);
}

#[test]
fn oracle_subcommand_small_bound() {
    let out = tricon(&["oracle", "--claims", "thm1,halfH,thm3", "--oracle-max-p", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["type"], "oracle");
        assert_eq!(v["pass"], serde_json::Value::Bool(true));
        assert_eq!(v["lhs"], v["rhs"]);
    }
    assert!(text.lines().count() >= 10);
}

#[test]
fn hyphen_leading_value_sets_parse() {
    let out = tricon(&[
        "verify",
        "--claims",
        "thm3",
        "--primes",
        "5..13",
        "--m-set",
        "-10..10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = tricon(&[
        "verify",
        "--claims",
        "sunN2",
        "--n-max",
        "6",
        "--bc-grid",
        "-1..1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 54);
}

#[test]
fn all_subcommand_emits_three_record_kinds() {
    let out = tricon(&[
        "all",
        "--claims",
        "thm1,halfH,sunN2",
        "--primes",
        "5..31",
        "--n-max",
        "4",
        "--grid-lemmas",
        "5",
        "--grid-integral",
        "3",
        "--grid-certificate",
        "3",
        "--grid-forms",
        "5",
        "--oracle-max-p",
        "13",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut kinds = std::collections::BTreeSet::new();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], serde_json::Value::Bool(true));
        kinds.insert(v["type"].as_str().unwrap().to_string());
    }
    let expected: std::collections::BTreeSet<String> =
        ["congruence", "identity", "oracle"].iter().map(|s| s.to_string()).collect();
    assert_eq!(kinds, expected);
}

#[test]
fn thm3_direct_flag_matches_default_route() {
    let fast = tricon(&["verify", "--claims", "thm3", "--primes", "5..31"]);
    let direct = tricon(&[
        "verify",
        "--claims",
        "thm3",
        "--primes",
        "5..31",
        "--thm3-direct",
    ]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(direct.status.code(), Some(0));
    assert_eq!(fast.stdout, direct.stdout);
}
