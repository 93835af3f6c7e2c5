use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clasperkit")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn wheel_one_report() {
    let out = run(&["wheel", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["outputs"]["alexander_text"], "-2t^-1 + 5 - 2t");
    assert_eq!(r["outputs"]["unit_equivalent"], true);
    assert_eq!(r["outputs"]["d_coeffs"][4], "13/12");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify-all", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let r = report(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["outputs"]["checks_failed"], 0);
}

#[test]
fn missing_file_is_malformed_input() {
    let out = run(&["conway", "--pd", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_diagram_is_malformed_input() {
    let dir = std::env::temp_dir().join(format!("clasperkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"pd":[[1,2,3,4,"+"]]}"#).unwrap();
    assert_eq!(run(&["conway", "--pd", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["alexander", "--pd", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["wheel", "--n", "0"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["conway", "--pd", &data("trefoil.json"), "--series-order", "6"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    assert_eq!(r["outputs"]["conway"], serde_json::json!([1, 0, 1]));
    assert_eq!(r["outputs"]["c"][4], "1/12");
    assert!(r.get("runtime_ms").is_none());
    assert!(report(&run(&["wheel", "--n", "1", "--timings"])).get("runtime_ms").is_some());
}

#[test]
fn alexander_routes_agree() {
    let r = report(&run(&["alexander", "--pd", &data("trefoil.json")]));
    assert_eq!(r["outputs"]["fox"], r["outputs"]["skein"]);
    assert_eq!(r["pass"], true);
}

#[test]
fn weights_both_routes() {
    let out = run(&["weights", "eval", "--web", &data("wheel2.json"), "--degree", "2", "--route", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["outputs"]["brute"], "-2");
    assert_eq!(r["outputs"]["clasper"], "-2");
    let r = report(&run(&["weights", "eval", "--web", &data("double_bubble.json"), "--degree", "3"]));
    assert_eq!(r["outputs"]["brute"], "0");
    assert_eq!(r["outputs"]["agreement"], true);
    let out = run(&["weights", "eval", "--web", &data("wheel2.json"), "--degree", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vanish_and_bracket() {
    let r = report(&run(&["vanish", "--graph", &data("graph.json")]));
    assert_eq!(r["outputs"]["alexander"]["coeffs"], serde_json::json!({"0": 1}));
    assert_eq!(r["outputs"]["trace"]["ends_empty"], true);
    let r = report(&run(&["bracket", "--pd", &data("trefoil.json"), "--claspers", &data("sites.json"), "--invariant", "c2"]));
    // trefoil minus the unknot obtained by one crossing change
    assert_eq!(r["outputs"]["value"], "1");
    let out = run(&["bracket", "--pd", &data("trefoil.json"), "--claspers", &data("sites.json"), "--invariant", "jones"]);
    assert_eq!(out.status.code(), Some(2));
}
