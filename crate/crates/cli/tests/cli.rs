use std::process::{Command, Output};

use serde_json::Value;

fn meandric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meandric"))
        .args(args)
        .env_remove("MEANDRIC_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = meandric(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(args: &[&str]) -> i32 {
    meandric(args).status.code().expect("exit code")
}

#[test]
fn count_examples() {
    assert_eq!(json(&["count", "--family", "shallow", "--n", "3"])["count"], "6");
    assert_eq!(json(&["count", "--family", "partners", "--ell", "2", "--m", "2"])["count"], "4");
    assert_eq!(json(&["count", "--family", "shallow", "--n", "1"])["count"], "1");
    let text = meandric(&["count", "--family", "cyclic-shallow", "--n", "4", "--format", "text"]);
    assert!(text.status.success());
    assert_eq!(code(&["count", "--family", "partners", "--m", "2"]), 2);
    assert_eq!(code(&["count", "--family", "shallow", "--n", "0"]), 2);
}

#[test]
fn distance_examples() {
    let v = json(&["distance", "--pi", "1,2/3,4", "--rho", "1,4/2,3", "--oracle"]);
    assert_eq!(v["components"], 2);
    assert_eq!(v["d_h"], 2);
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(json(&["distance", "--pi", "1/2/3", "--rho", "1,2,3"])["d_h"], 2);
    assert_eq!(code(&["distance", "--pi", "1,3/2,4", "--rho", "1/2/3/4"]), 2);
    assert_eq!(code(&["distance", "--pi", "1,2", "--rho", "1/2/3"]), 2);
}

#[test]
fn average_examples() {
    let dn = json(&["average", "--kind", "dn", "--n", "2"]);
    assert_eq!(dn["d_n"]["num"], "1");
    assert_eq!(dn["d_n"]["den"], "2");
    assert_eq!(dn["float"], 0.5);
    assert_eq!(json(&["average", "--kind", "btilde", "--n", "1"])["btilde_n"]["num"], "0");
    let d2 = json(&["average", "--kind", "dtilde2m", "--m", "1"]);
    assert_eq!((d2["dtilde_2m"]["num"].as_str(), d2["dtilde_2m"]["den"].as_str()), (Some("1"), Some("2")));
    let limit = json(&["average", "--kind", "dn", "--n", "200", "--limit-check"]);
    assert!(limit["limit"]["distance"].as_f64().unwrap() < 0.01);
    assert_eq!(json(&["average", "--kind", "dn", "--n", "4", "--upto"]).as_array().unwrap().len(), 4);
    assert_eq!(code(&["average", "--kind", "btilde", "--n", "2000"]), 3);
    assert_eq!(code(&["average", "--kind", "dn"]), 2);
}

#[test]
fn verify_suites_pass() {
    for (suite, k) in [("core", "7"), ("bijection", "8"), ("formulas", "8"), ("series", "6")] {
        let v = json(&["verify", "--suite", suite, "--max-n", k]);
        let checks = v.as_array().unwrap();
        assert!(!checks.is_empty(), "{suite}");
        assert!(checks.iter().all(|c| c["ok"] == true), "{suite}: {v}");
    }
}

#[test]
fn sample_is_reproducible() {
    let v = json(&["sample", "--n", "1", "--trials", "10", "--seed", "1", "--mode", "all"]);
    assert_eq!(v["mean"], 1.0);
    let args = ["sample", "--n", "20,30", "--trials", "500", "--seed", "7", "--format", "csv"];
    let a = meandric(&args).stdout;
    let b = meandric(&[&args[..], &["--threads", "1"]].concat()).stdout;
    assert_eq!(a, b);
    let csv = String::from_utf8(a).unwrap();
    assert_eq!(csv.lines().next(), Some("n,mode,trials,seed,mean,stderr"));
    assert_eq!(csv.lines().count(), 3);
    let fixed = json(&["sample", "--n", "8", "--trials", "50", "--mode", "fixed-base", "--base", "lambda2"]);
    assert_eq!(fixed["n"], 8);
    assert_eq!(code(&["sample", "--n", "7", "--trials", "5", "--mode", "fixed-base", "--base", "lambda2"]), 2);
}

#[test]
fn growth_rate_and_constants() {
    let g = json(&["growth-rate"]);
    assert!((g["rate"].as_f64().unwrap() - 5.21914).abs() < 1e-3);
    assert!((g["alpha_star"].as_f64().unwrap() - 0.4694).abs() < 1e-3);
    let c = json(&["constants"]);
    assert!((c["interval_distance_offset"].as_f64().unwrap() + 28.0 / 27.0).abs() < 1e-12);
}

#[test]
fn tree_round_trip() {
    let t = json(&["tree", "forget", "--pi", "1,2,3/4", "--rho", "1,4/2/3"]);
    let tree = t["tree"].as_str().unwrap().to_string();
    let back = json(&["tree", "recover", "--tree", &tree]);
    assert_eq!(back["pi"], "1,2,3/4");
    assert_eq!(back["rho"], "1,4/2/3");
}

#[test]
fn rainbow_experiment_runs() {
    let v = json(&["experiment", "rainbow", "--n", "6"]);
    assert_eq!(v["max_partners"], 24);
}
