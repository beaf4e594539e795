use std::process::{Command, Output};

use serde_json::Value;

fn liespec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liespec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn envelope(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = liespec(&all);
    let v = serde_json::from_slice(&o.stdout).expect("json on stdout");
    (o.status.code().unwrap(), v)
}

#[test]
fn certify_gr27_finds_the_symmetric_point() {
    let o = liespec(&["certify", "--case", "gr27"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("solutions: (6, 3, 2)"), "{text}");
    assert!(text.contains("x^5 - 5/2*x^4 + 8"), "{text}");
}

#[test]
fn certify_gr38_excludes_the_spurious_root() {
    let (code, v) = envelope(&["certify", "--case", "gr38"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    let roots = v["payload"]["positive_roots"].as_array().unwrap();
    assert_eq!(roots.len(), 2);
    assert_eq!(roots.iter().filter(|r| r["admissible"] == true).count(), 1);
    assert_eq!(
        v["payload"]["solutions"],
        serde_json::json!([["12", "4", "3"]])
    );
}

#[test]
fn perturbed_volume_fails_with_exit_one() {
    let o = liespec(&["certify", "--case", "gr27", "--volume", "433"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("solutions: none"));
}

#[test]
fn tricky_term_on_tensor_is_scalar() {
    let o = liespec(&["tricky-term", "--case", "gr38", "--rep", "tensor"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.trim() == "9/40"));
}

#[test]
fn eigenvalues_at_the_symmetric_metric() {
    let (code, v) = envelope(&["eigenvalues", "--case", "gr38", "--s", "12,4,3"]);
    assert_eq!(code, 0);
    let rows = v["payload"]["contributions"].as_array().unwrap();
    let value = |name: &str| rows.iter().find(|r| r["irrep"] == name).unwrap()["value"].clone();
    assert_eq!(value("ω3"), "9/2");
    assert_eq!(value("ω1+ω3"), "9/2");
    assert_eq!(v["payload"]["lambda1"], "9/2");
    assert_eq!(v["payload"]["multiplicity"], 56);
}

#[test]
fn json_envelope_shape() {
    let (code, v) = envelope(&["branching", "--case", "gr27"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "branching");
    assert_eq!(v["case"], "Gr27");
    assert_eq!(v["status"], "pass");
    assert!(v["timing"]["elapsed_ms"].is_u64());
    assert!(v["payload"].is_object());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(liespec(&["nosuch"]).status.code(), Some(2));
    assert_eq!(liespec(&["certify"]).status.code(), Some(2));
    assert_eq!(
        liespec(&["certify", "--case", "gr99"]).status.code(),
        Some(2)
    );
    assert_eq!(
        liespec(&["eigenvalues", "--case", "gr27", "--s", "1,x,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        liespec(&["eigenvalues", "--case", "gr27", "--s", "1,-1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        liespec(&["invariants", "--case", "gr27", "--rep", "nosuch"])
            .status
            .code(),
        Some(2)
    );
    let (code, v) = envelope(&["casimir", "--case", "gr27", "--rep", "spin", "--sub", "h"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "fail");
}

#[test]
fn selftest_is_deterministic() {
    let a = liespec(&["selftest"]);
    let b = liespec(&["selftest"]);
    assert_eq!(stdout(&a), stdout(&b));
    let lines: Vec<String> = stdout(&a).lines().map(str::to_owned).collect();
    assert_eq!(
        lines
            .iter()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .count(),
        13
    );
}

#[test]
fn single_criterion() {
    let o = liespec(&["selftest", "--criterion", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS  5"));
    assert_eq!(
        liespec(&["selftest", "--criterion", "99"]).status.code(),
        Some(2)
    );
}

#[test]
fn casimir_eigenspaces_span() {
    let (code, v) = envelope(&[
        "casimir",
        "--case",
        "gr38",
        "--rep",
        "sym2-spin",
        "--sub",
        "k",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["complete"], true);
    let dims: u64 = v["payload"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(dims, 36);
}

#[test]
fn einstein_verdicts() {
    let (code, v) = envelope(&["einstein", "--case", "gr38"]);
    assert_eq!(code, 0);
    for r in v["payload"]["records"].as_array().unwrap() {
        assert_eq!(r["verdict"]["verdict"], "unstable");
        assert_eq!(r["verdict"]["witness"], "ω3");
    }
    let text = stdout(&liespec(&["einstein", "--case", "gr27"]));
    assert!(text.contains("→ inconclusive"), "{text}");
}

#[test]
fn verification_commands_pass() {
    assert_eq!(liespec(&["verify-chevalley"]).status.code(), Some(0));
    assert_eq!(liespec(&["verify-reps"]).status.code(), Some(0));
    let o = liespec(&["invariants", "--case", "gr38", "--rep", "tensor"]);
    assert!(stdout(&o).contains("dimension 2"));
    let o = liespec(&["dump-basis", "--case", "gr38", "--piece", "p2"]);
    assert!(stdout(&o).starts_with("Gr38 p2: 3 elements"));
    assert_eq!(
        liespec(&["dump-basis", "--piece", "h"]).status.code(),
        Some(2)
    );
}
