use std::process::Command;

use flatband::cli::run_with;
use serde_json::Value;

fn graph(name: &str) -> String {
    format!("{}/examples/graphs/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(std::iter::once("flatband").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn detect_reports_the_minimal_polynomial() {
    let v = json(&["detect", &graph("fig1-left")]);
    assert_eq!(v["flat_bands"][0]["minpoly"], serde_json::json!([1, 1]));
    assert_eq!(v["flat_bands"][0]["value"], "-1");
    assert_eq!(v["flat_bands"][0]["multiplicity"], 1);
}

#[test]
fn screen_names_the_condition() {
    let v = json(&["screen2", &graph("honeycomb")]);
    assert_eq!(v["certificate"], "condition (iii): I₁₁=∅ and I₂₂=∅");
    assert_eq!(json(&["screen2", &graph("fivecell-fig8")])["candidates"], serde_json::json!([-2]));
}

#[test]
fn enumerate_four_gives_six_values() {
    let v = json(&["enumerate", "--nu", "4"]);
    let mut got: Vec<String> = v["values"].as_array().unwrap().iter().map(|x| x["value"].as_str().unwrap().to_string()).collect();
    got.sort();
    assert_eq!(got, ["(-1+√5)/2", "(-1-√5)/2", "-1", "-2", "0", "1"]);
    let w = json(&["enumerate", "--nu", "3", "--witnesses"]);
    assert!(w["values"][0]["witness"].is_object());
}

#[test]
fn eigvec_is_verified() {
    let v = json(&["eigvec", &graph("fivecell-fig8"), "--band", "0"]);
    assert_eq!(v["verified"], true);
    let (code, _, err) = run(&["eigvec", &graph("ladder"), "--band", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"));
}

#[test]
fn bands_writes_csv_header() {
    let dir = std::env::temp_dir().join(format!("flatband-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("pyro.csv");
    json(&["bands", &graph("pyrochlore-1d"), "--grid", "8", "--out", out.to_str().unwrap()]);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next().unwrap(), "theta_1,E_1,E_2,E_3,E_4");
    assert_eq!(text.lines().count(), 9);
    let out = dir.join("pyro.json");
    json(&["bands", &graph("pyrochlore-1d"), "--grid", "8", "--out", out.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 8);
}

#[test]
fn symmetry_and_generate() {
    let v = json(&["symmetry", &graph("pyrochlore-1d"), "--mode", "strict"]);
    assert_eq!(v["symmetries"][0]["permutation"], "(0 1)(2 3)");
    let dir = std::env::temp_dir().join(format!("flatband-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("g.json");
    let v = json(&["generate", "cartesian", "--base", &graph("fig1-right"), "--finite", "P3", "--out", out.to_str().unwrap()]);
    assert_eq!(v["claimed_flat_bands"], v["detected_flat_bands"]);
    assert_eq!(v["nu"], 6);
    let v = json(&["generate", "cone", "--finite", "P2", "--out", out.to_str().unwrap()]);
    assert_eq!(v["detected_flat_bands"], serde_json::json!(["-1"]));
    let (code, _, _) = run(&["generate", "cone", "--finite", "P3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn perturb_modes() {
    let v = json(&["perturb", &graph("sawtooth-fig10"), "--q", "-1,0"]);
    assert_eq!(v["report"]["flat_bands"][0]["value"], "-2");
    let v = json(&["perturb", &graph("sawtooth-fig10"), "--locus"]);
    assert_eq!(v["locus_text"], "Q1 = Q0 + 1, λ = Q0 - 1");
    let v = json(&["perturb", &graph("honeycomb")]);
    assert_eq!(v["certificate"], serde_json::json!([1, 0]));
    let (code, _, _) = run(&["perturb", &graph("sawtooth-fig10"), "--q", "1,2,3"]);
    assert_eq!(code, 1);
}

#[test]
fn validate_and_exit_codes() {
    assert_eq!(json(&["validate", &graph("creutz")])["valid"], true);
    assert_eq!(run(&["detect", &graph("even-sublattice")]).0, 1);
    assert_eq!(json(&["detect", &graph("even-sublattice"), "--force-disconnected"])["connected"], false);
    assert_eq!(run(&["detect", "/nonexistent.json"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["bands", &graph("creutz")]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_flatband");
    let ok = Command::new(bin).args(["detect", &graph("creutz")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["flat_bands"].as_array().unwrap().len(), 2);
    assert_eq!(Command::new(bin).args(["screen2", &graph("creutz")]).output().unwrap().status.code(), Some(1));
    assert_eq!(Command::new(bin).arg("--nope").output().unwrap().status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    for args in [vec!["detect".to_string(), graph("pyrochlore-1d")], vec!["enumerate".into(), "--nu".into(), "4".into(), "--witnesses".into()]] {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&a).1, run(&a).1);
    }
}
