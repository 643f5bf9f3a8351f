use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coloop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> JSONSchema {
    let text = include_str!("../schema/output.schema.json");
    JSONSchema::compile(&serde_json::from_str(text).unwrap()).expect("schema compiles")
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let s = schema();
    if let Err(errs) = s.validate(&v) {
        let msgs: Vec<String> = errs.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:?}");
    }
    (v, o.status.code().unwrap())
}

#[test]
fn lagrange_csv_row() {
    let o = run(&["coeffs", "--kind", "d", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("n,composition,d\n"));
    assert!(out.lines().any(|l| l == "5,\"(1,1,1,1)\",42"));
    assert!(String::from_utf8(o.stderr).unwrap().contains(coloop::VERSION));
}

#[test]
fn labeled_csv_columns() {
    let o = run(&["--format", "csv", "coeffs", "--kind", "de", "--n", "3"]);
    let out = stdout(&o);
    assert!(out.starts_with("n,e,composition,d_e\n"));
    // d^(1,2)(1,1) = 1 and d^(2,1) vanishes
    assert!(out.lines().any(|l| l == "3,\"(1,2)\",\"(1,1)\",1"));
    assert!(out.lines().any(|l| l == "3,\"(2,1)\",\"(1,1)\",0"));
}

#[test]
fn verify_whitelists_expected_failures() {
    let o = run(&["verify", "--flavor", "fdb", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with(&format!("coloop {}\n", coloop::VERSION)));
    assert!(out.lines().any(|l| l.starts_with("expected-fail") && l.contains("coinverse-left") && l.contains("x3 ")));
    assert!(!out.lines().any(|l| l.starts_with("regression")));

    let (v, code) = json_of(&["verify", "--flavor", "fdb", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["regressions"], 0);
    let first_fail = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["verdict"] == "expected-fail")
        .unwrap()
        .clone();
    assert_eq!(first_fail["axiom"], "coinverse-left");
    assert_eq!(first_fail["n"], 3);
}

#[test]
fn verify_report_flag_and_samples() {
    let o = run(&["verify", "--flavor", "inv", "--max-degree", "3", "--report", "json", "--samples", "4", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(schema().is_valid(&v));
}

#[test]
fn witness_prints_the_matrices() {
    let o = run(&["witness", "diff-power-assoc"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[[2, 4], [1, 2]]"));
    assert!(out.contains("[[3, 3], [1, 1]]"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn every_witness_validates() {
    for name in coloop::seriesloops::WITNESSES {
        let (v, code) = json_of(&["witness", name]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(v["passed"], true);
    }
    let (v, _) = json_of(&["--seed", "99", "witness", "ucd-not-loop"]);
    assert_eq!(v["seed"], 99);
}

#[test]
fn other_commands_validate() {
    let cases: [&[&str]; 8] = [
        &["coeffs", "--kind", "de", "--n", "4"],
        &["coop", "--flavor", "fdb", "--kind", "delta_l", "--n", "4"],
        &["coop", "--flavor", "inv", "--kind", "s_r", "--n", "3"],
        &["operators", "--op", "r", "--degrees", "1,2,1"],
        &["operators", "--op", "re", "--degrees", "1,2", "--e", "1,2"],
        &["divide", "--flavor", "diff", "--side", "left", "--order", "4"],
        &["invert", "--flavor", "diff", "--order", "5"],
        &["trees", "--l", "4"],
    ];
    for args in cases {
        let (_, code) = json_of(args);
        assert_eq!(code, 0, "{args:?}");
    }
}

#[test]
fn coop_matches_library() {
    let o = run(&["coop", "--flavor", "fdb", "--kind", "delta_r", "--n", "3"]);
    let t = coloop::coloops::CoOpTable::shared(coloop::coloops::Flavor::FdB);
    assert!(stdout(&o).contains(&t.codivision(coloop::coloops::Side::Right, 3).to_string()));
}

#[test]
fn divide_matrix_series_round_trip() {
    let a = r#"{"flavor":"diff","order":3,"coeffs":[[["1","2"],["0","1"]],[["0","1"],["1","0"]]]}"#;
    let b = r#"{"flavor":"diff","order":3,"coeffs":[[["1","0"],["3","1"]]]}"#;
    let (v, code) = json_of(&["divide", "--flavor", "diff", "--side", "right", "--order", "3", "--algebra", "m2q", "--a", a, "--b", b]);
    assert_eq!(code, 0);
    let c = serde_json::to_string(&v["result"]).unwrap();
    // closed mode agrees and the quotient reparses
    let (w, _) = json_of(&[
        "divide", "--flavor", "diff", "--side", "right", "--order", "3", "--algebra", "m2q", "--mode", "closed", "--a", a, "--b", b,
    ]);
    assert_eq!(v["result"], w["result"]);
    let (_, code) = json_of(&["divide", "--flavor", "diff", "--side", "right", "--order", "3", "--algebra", "m2q", "--a", &c, "--b", b]);
    assert_eq!(code, 0);
}

#[test]
fn sedenion_inverses_differ() {
    let a = r#"{"coeffs":[[["e1 + e10","e5 + e14"],["0","1"]]]}"#;
    let common = ["invert", "--flavor", "inv", "--order", "3", "--algebra", "m2sed", "--a", a];
    let (r, _) = json_of(&[&common[..], &["--side", "right"]].concat());
    let (l, _) = json_of(&[&common[..], &["--side", "left"]].concat());
    assert_eq!(r["result"]["coeffs"][1], l["result"]["coeffs"][1]);
    assert_ne!(r["result"]["coeffs"][2], l["result"]["coeffs"][2]);
}

#[test]
fn output_is_deterministic() {
    for args in [&["--format", "json", "verify", "--flavor", "inv", "--max-degree", "4"][..], &["witness", "ucd-not-loop"][..]] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["coeffs", "--kind", "d"][..],
        &["coeffs", "--kind", "d", "--n", "3", "--bogus"][..],
        &["coop", "--flavor", "nope", "--kind", "delta", "--n", "2"][..],
        &["witness", "no-such-witness"][..],
        &["invert", "--flavor", "inv", "--order", "3"][..],
        &["divide", "--flavor", "diff", "--side", "left", "--order", "2", "--algebra", "m2q"][..],
        &["divide", "--flavor", "diff", "--side", "left", "--order", "2", "--algebra", "q", "--a", "{", "--b", "{}"][..],
        &["operators", "--op", "re", "--degrees", "1,2,1", "--e", "1,2"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn version_flag() {
    let o = run(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(coloop::VERSION));
}

#[test]
fn schema_rejects_malformed_output() {
    let bad = serde_json::json!({"version": "0.1.0", "command": "trees", "l": 1, "trees": [{"m": [1], "tree": "x"}]});
    assert!(!schema().is_valid(&bad));
    let unknown = serde_json::json!({"version": "0.1.0", "command": "plot"});
    assert!(!schema().is_valid(&unknown));
}
