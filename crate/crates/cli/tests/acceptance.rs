//! Serialization slice of the acceptance suite: fan JSON round-trips must be
//! byte-exact and reconstruct equal fan values.

use std::process::Command;

use adetoric::catalog::{entry, sing};
use adetoric::newton::dual_fan;
use adetoric_cli::json::FanJson;

#[test]
fn criterion_8_fan_json_round_trip() {
    let mut failures: Vec<String> = Vec::new();
    for id in ["A1", "A5", "D6", "E6", "E7", "E8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_adetoric"))
            .args(["fan", "--sing", id])
            .output()
            .expect("binary runs");
        if !out.status.success() {
            failures.push(format!("{id}: fan command failed"));
            continue;
        }
        let text = String::from_utf8(out.stdout).expect("utf-8");
        let fj: FanJson = match serde_json::from_str(&text) {
            Ok(fj) => fj,
            Err(e) => {
                failures.push(format!("{id}: {e}"));
                continue;
            }
        };
        let again = serde_json::to_string_pretty(&serde_json::to_value(&fj).unwrap()).unwrap();
        if text.trim_end() != again {
            failures.push(format!("{id}: bytes differ after round trip"));
        }
        let direct = dual_fan(&entry(&sing(id)).unwrap().equation).unwrap();
        match fj.to_fan() {
            Ok(fan) if fan == direct => {}
            Ok(_) => failures.push(format!("{id}: reconstructed fan differs")),
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance criterion 8 (fan JSON round-trip byte-equality): {verdict}");
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
