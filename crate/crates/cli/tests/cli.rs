use std::process::{Command, Output};

use serde_json::Value;

fn ktgw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktgw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = ktgw(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

fn rat(v: &Value) -> (String, String) {
    (
        v["num"].as_str().unwrap().to_string(),
        v["den"].as_str().unwrap().to_string(),
    )
}

#[test]
fn gw_both_methods_agree() {
    let (v, code) = json(&["gw", "1", "1", "0", "0", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert_eq!(rat(&r["e134"]), ("1".into(), "1".into()));
        assert_eq!(rat(&r["e234"]), ("1".into(), "1".into()));
        assert_eq!(rat(&r["e124"]), ("0".into(), "1".into()));
        assert_eq!(r["agrees"], true);
    }
    assert_eq!(rows[0]["method"], "closed");
    assert_eq!(rows[1]["method"], "enumerated");
}

#[test]
fn gw_rejects_non_plucker_class() {
    let out = ktgw(&["gw", "1", "0", "0", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not representable by tori (Plücker)"), "{err}");
}

#[test]
fn gw_zero_and_negative_classes() {
    let (v, code) = json(&["gw", "0", "0", "0", "0"]);
    assert_eq!(code, 0);
    assert_eq!(rat(&v["results"][0]["e134"]).0, "0");
    let (v, code) = json(&["gw", "-2", "-4", "-1", "-2", "--method", "enumerate"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(rat(&v["results"][0]["e234"]).0, "-20");
    assert_eq!(v["results"][0]["agrees"], Value::Null);
}

#[test]
fn moduli_records() {
    let (v, code) = json(&["moduli", "2", "0"]);
    assert_eq!(code, 0);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let auts: Vec<&str> = rows.iter().map(|r| r["aut_size"].as_str().unwrap()).collect();
    assert_eq!(auts, ["2", "2", "1", "2"]);
    for r in rows {
        assert_eq!(r["tau2"]["approx"], true);
        assert!(r["cr_residual"]["value"].as_f64().unwrap() < 1e-9);
        assert_eq!(r["regular"], true);
    }
    let (v, _) = json(&["moduli", "1", "0"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"][0]["aut_size"], "1");

    let out = ktgw(&["moduli", "0", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("obstructed"));
}

#[test]
fn verify_suites_pass() {
    for (suite, max) in [("identities", "60"), ("oracle", "4"), ("geometry", "2")] {
        let (v, code) = json(&["--jobs", "2", "verify", suite, "--max", max]);
        assert_eq!(code, 0, "{suite}");
        for r in v["results"].as_array().unwrap() {
            assert_eq!(r["ok"], true, "{r}");
            assert_eq!(r["failed"], "0");
        }
    }
    let out = ktgw(&["verify", "oracle", "--max", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn baseline_table() {
    let out = ktgw(&["--format", "csv", "baseline", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "l,count_hnf,sigma1,equal");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[6], "6,12,12,true");
    let out = ktgw(&["--format", "csv", "baseline", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().nth(1), Some("1,1,1,true"));
    assert_eq!(ktgw(&["baseline", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = ktgw(&["--format", "json", "--jobs", "1", "moduli", "6", "4"]);
    let b = ktgw(&["--format", "json", "--jobs", "3", "moduli", "6", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ktgw(&["gw", "1", "1"]).status.code(), Some(2));
    assert_eq!(ktgw(&["--format", "yaml", "gw", "1", "1", "0", "0"]).status.code(), Some(2));
    assert_eq!(ktgw(&["gw", "5000000", "0", "0", "0"]).status.code(), Some(2));
}
