use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tc-arr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn tc_single_and_grid() {
    let rows = json(&["tc", "3", "2", "--json"]);
    assert_eq!(rows[0]["tc"], 4);

    let rows = json(&["tc", "--grid", "n=1..6,r=1..n", "--json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|row| row["lower"] == row["tc"]));

    let out = run(&["tc", "--grid", "n=1..3", "--csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,r,lower,upper_constructive,upper_dimension,tc")
    );
    assert_eq!(lines.next(), Some("1,1,2,2,2,2"));
    assert_eq!(lines.count(), 5);

    let out = run(&["tc", "5", "2"]);
    assert!(stdout(&out).contains("non-tight"));
}

#[test]
fn tc_rejects_r_above_n() {
    let out = run(&["tc", "2", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("r exceeds n"));
}

#[test]
fn verify_lower_bound() {
    let dump = json(&["verify-lower-bound", "3", "2", "--json"]);
    assert_eq!(dump["component_terms"], 2);
    assert_eq!(dump["bidegree"], serde_json::json!([2, 1]));

    let dump = json(&["verify-lower-bound", "4", "3", "--json"]);
    assert_eq!(dump["k"], 3);
    assert_eq!(dump["component_terms"], 3);

    let dump = json(&["verify-lower-bound", "1", "1", "--json"]);
    assert_eq!(dump["k"], 0);
    assert_eq!(dump["product_terms"], 2);

    let dump = json(&["verify-lower-bound", "6", "2", "--set", "2,5", "--json"]);
    assert_eq!(dump["indices"], serde_json::json!([2, 5]));
    assert!(!run(&["verify-lower-bound", "6", "2", "--set", "2"])
        .status
        .success());

    let text = stdout(&run(&["verify-lower-bound", "3", "2"]));
    assert!(text.contains("term count: 2"));
}

#[test]
fn plan_worked_example() {
    let doc = json(&[
        "plan", "3", "2", "--from", "0,1/4", "--to", "1/2,0", "--steps", "4",
    ]);
    assert_eq!(doc["mode"], "skeleton");
    assert_eq!(doc["domain"], 0);
    assert_eq!(doc["agreement"], serde_json::json!([]));
    let samples = doc["samples"].as_array().unwrap();
    let at = |t: &str| samples.iter().find(|s| s["t"] == t).unwrap()["coords"].clone();
    assert_eq!(at("0"), serde_json::json!(["0", "1/4"]));
    assert_eq!(at("1/4"), serde_json::json!(["0", {"approx": 0.625}]));
    assert_eq!(at("1/2"), serde_json::json!(["0", "0"]));
    assert_eq!(at("1"), serde_json::json!(["1/2", "0"]));
}

#[test]
fn plan_includes_phase_boundaries() {
    // tau(1/8) is irrational: its neighbours get sampled too
    let doc = json(&[
        "plan", "3", "3", "--from", "1/8,0", "--to", "1/2,1/3", "--steps", "2",
    ]);
    assert!(doc["samples"].as_array().unwrap().len() > 3);
}

#[test]
fn plan_diagonal_and_product() {
    let doc = json(&[
        "plan",
        "4",
        "3",
        "--from",
        "1/3,0,1/5",
        "--to",
        "1/3,0,1/5",
        "--steps",
        "8",
    ]);
    assert_eq!(doc["domain"], 3);
    let samples = doc["samples"].as_array().unwrap();
    assert!(samples
        .iter()
        .all(|s| s["coords"] == serde_json::json!(["1/3", "0", "1/5"])));

    let doc = json(&[
        "plan",
        "3",
        "2",
        "--product",
        "--from",
        "0,0,1/4",
        "--to",
        "1/2,0,1/4",
        "--steps",
        "2",
    ]);
    assert_eq!(doc["mode"], "product");
    assert_eq!(doc["domain"], 3);
    assert_eq!(doc["rules"], 4);
    assert_eq!(doc["circle_rule"], 1);
    let mid = &doc["samples"][1];
    assert_eq!(mid["t"], "1/2");
    assert_eq!(mid["circle"], serde_json::json!({"approx": 0.25}));
}

#[test]
fn plan_rejects_bad_endpoints() {
    let out = run(&["plan", "3", "2", "--from", "1/2,1/4", "--to", "0,0"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("support"));
    let out = run(&["plan", "3", "2", "--from", "0.5,0", "--to", "0,0"]);
    assert!(!out.status.success());
}

#[test]
fn simulate_reports() {
    let report = json(&[
        "simulate",
        "5",
        "2",
        "--queries",
        "1000",
        "--steps",
        "256",
        "--seed",
        "7",
    ]);
    assert_eq!(report["membership_violations"], 0);
    assert_eq!(report["endpoint_violations"], 0);
    assert_eq!(report["partition_violations"], 0);
    assert_eq!(report["violations"], serde_json::json!([]));

    let report = json(&["simulate", "2", "2", "--queries", "200", "--seed", "1"]);
    let histogram: Vec<u64> = serde_json::from_value(report["histogram"].clone()).unwrap();
    assert_eq!(histogram.len(), 2);
    assert!(histogram.iter().all(|&c| c > 0));

    let again = json(&["simulate", "2", "2", "--queries", "200", "--seed", "1"]);
    assert_eq!(again["histogram"], report["histogram"]);

    let report = json(&["simulate", "4", "3", "--queries", "100", "--product"]);
    assert_eq!(report["histogram"].as_array().unwrap().len(), 5);

    assert!(!run(&["simulate", "3", "2", "--queries", "0"])
        .status
        .success());
}

#[test]
fn search_zdcl() {
    let report = json(&["search-zdcl", "3", "2", "--json"]);
    assert_eq!(report["zdcl_degree_one"], 3);
    assert_eq!(report["tc"], 4);
    assert_eq!(report["conjecture"], "consistent");

    let report = json(&["search-zdcl", "2", "2", "--brute", "--json"]);
    assert_eq!(report["zdcl_brute_force"], 2);
    assert_eq!(report["tc"], 3);

    let report = json(&["search-zdcl", "8", "3", "--json"]);
    assert_eq!(report["zdcl_degree_one"], 5);
    assert_eq!(report["formula"], 5);

    let out = run(&["search-zdcl", "5", "2", "--brute"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("capped"));

    let out = Command::new(env!("CARGO_BIN_EXE_tc-arr"))
        .args(["search-zdcl", "5", "2", "--brute", "--json"])
        .env("TC_BRUTE_CAP", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
}
