//! End-to-end tests of the binary: exit codes, JSON schema stability,
//! round-trips and SVG determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use adetoric::lattice::Fan;
use adetoric::newton::{dual_fan, parse_polynomial};
use adetoric_cli::json::FanJson;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_adetoric"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--sing", "E6"]).status.code(), Some(0));
    // an impossible jet cap is an honest verification failure
    assert_eq!(
        run(&["verify", "--sing", "A1", "--cap", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["verify", "--sing", "Q5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--sing", "D5"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["fan"]).status.code(), Some(2)); // needs --sing or --eq
}

#[test]
fn verify_e6_passes_with_minimality() {
    let v = stdout_json(&["verify", "--sing", "E6"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["sections"]["minimality"]["pass"], true);
    assert_eq!(v["sections"]["minimality"]["detail"][0]["is_minimal"], true);
    assert_eq!(v["sections"]["charts"]["detail"]["witnesses"], 0);
}

#[test]
fn verify_e8_reports_the_exception() {
    let v = stdout_json(&["verify", "--sing", "E8"]);
    assert_eq!(v["pass"], true);
    let detail = &v["sections"]["minimality"]["detail"];
    assert_eq!(detail[0]["is_minimal"], true);
    assert_eq!(detail[1]["is_minimal"], false);
    assert_eq!(detail[1]["reducible"].as_array().unwrap().len(), 6);
    let identities = detail[1]["printed_identities"].as_array().unwrap();
    assert_eq!(identities.len(), 7);
    let bad_sum: Vec<_> = identities
        .iter()
        .filter(|i| i["sum_valid"] == false)
        .collect();
    assert_eq!(bad_sum.len(), 1);
    assert_eq!(bad_sum[0]["vector"], serde_json::json!([5, 9, 14]));
}

#[test]
fn verify_a12_generates_beyond_the_printed_tables() {
    let v = stdout_json(&["verify", "--sing", "A12"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn fan_json_round_trip_is_byte_exact() {
    let out = run(&["fan", "--sing", "A2"]);
    assert!(out.status.success());
    let bytes = out.stdout.clone();
    let text = String::from_utf8(bytes).unwrap();
    let fj: FanJson = serde_json::from_str(&text).unwrap();
    // parse -> serialize reproduces the emitted bytes
    let again =
        serde_json::to_string_pretty(&serde_json::to_value(&fj).unwrap()).unwrap();
    assert_eq!(text.trim_end(), again);
    // the reconstructed fan equals the directly computed dual fan
    let fan: Fan = fj.to_fan().unwrap();
    let direct = dual_fan(&parse_polynomial("x*y - z^3").unwrap()).unwrap();
    assert_eq!(fan, direct);
    // schema fields are present
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["rays", "maximal_cones", "inserted", "regular", "minimal", "discrepancies"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn resolve_emits_inserted_rays_and_minimality() {
    let v = stdout_json(&["resolve", "--sing", "D4"]);
    assert_eq!(v["regular"], true);
    assert_eq!(v["minimal"], true);
    assert_eq!(v["inserted"].as_array().unwrap().len(), 4);
    let v = stdout_json(&["resolve", "--sing", "E8", "--variant", "full"]);
    assert_eq!(v["regular"], true);
    assert_eq!(v["minimal"], false);
}

#[test]
fn jets_a1_order_one() {
    let v = stdout_json(&["jets", "--sing", "A1", "-m", "1"]);
    let eqs: Vec<&str> = v["equations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap())
        .collect();
    assert_eq!(eqs, vec!["x_0*y_0 - z_0^2", "x_0*y_1 + x_1*y_0 - 2*z_0*z_1"]);
    assert_eq!(v["table_pass"], true);
}

#[test]
fn jets_e6_order_zero_is_the_equation() {
    let v = stdout_json(&["jets", "--sing", "E6", "-m", "0"]);
    assert_eq!(v["equations"][0], "x_0^4 + y_0^3 + z_0^2");
}

#[test]
fn gsigma_examples() {
    let v = stdout_json(&["gsigma", "--cone", "0,0,1;3,0,1;0,3,1"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 10);
    let v = stdout_json(&["gsigma", "--cone", "1,0,0;0,1,0;0,0,1"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert!(v["extra"].as_array().unwrap().is_empty());
    let v = stdout_json(&["gsigma", "--cone", "1,0,0;0,1,0;1,1,2", "--witnesses"]);
    assert!(v["generators"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([1, 1, 1])));
    // witnesses decompose the reducible box points
    for w in v["witnesses"].as_array().unwrap() {
        let sum: Vec<i64> = (0..3)
            .map(|i| {
                w["parts"][0][i].as_i64().unwrap() + w["parts"][1][i].as_i64().unwrap()
            })
            .collect();
        let target: Vec<i64> = (0..3).map(|i| w["vector"][i].as_i64().unwrap()).collect();
        assert_eq!(sum, target);
    }
    assert_eq!(run(&["gsigma", "--cone", "1,0;2,1"]).status.code(), Some(2));
    assert_eq!(
        run(&["gsigma", "--cone", "1,0,0;-1,0,0;0,1,0"]).status.code(),
        Some(2)
    );
}

#[test]
fn svg_output_is_deterministic_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| -> PathBuf { dir.path().join(name) };

    let p1 = path("e6a.svg");
    let p2 = path("e6b.svg");
    for p in [&p1, &p2] {
        let out = run(&["svg", "--sing", "E6", "--stage", "resolved", "--svg", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    // one labeled point per ray: 4 dual-fan rays + 5 inserted
    assert_eq!(text.matches("<circle").count(), 9);
    assert_eq!(text.matches("<text").count(), 9);
    assert_eq!(text.matches("class=\"inserted\"").count(), 5);

    let p3 = path("a4.svg");
    let out = run(&["svg", "--sing", "A4", "--stage", "dual", "--svg", p3.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&p3).unwrap();
    assert_eq!(text.matches("<circle").count(), 5);

    // the resolved picture reproduces the recorded combinatorics: one
    // segment per wall of the resolution fan
    let p4 = path("d4.svg");
    let out = run(&["svg", "--sing", "D4", "--stage", "resolved", "--svg", p4.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&p4).unwrap();
    let res = &adetoric::subdivision::build_resolution_fan(&adetoric::catalog::sing("D4"))
        .unwrap()[0];
    assert_eq!(text.matches("<circle").count(), res.fan.rays().len());
    assert_eq!(text.matches("<line").count(), res.fan.walls().len());
}

#[test]
fn json_flag_writes_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("fan.json");
    let out = bin()
        .args(["fan", "--sing", "E7", "--json", p.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let file = std::fs::read(&p).unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim_end(), String::from_utf8_lossy(&file));
}
