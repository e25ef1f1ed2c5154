use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_traceform"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout} {stderr}"));
    (code, v)
}

#[test]
fn two_reduced_and_pin_sign() {
    let (code, v) = json(&["2reduced", "--group", "catalog:sym:4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    let (code, v) = json(&["2reduced", "--group", "catalog:quaternion8"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], false);
    let (code, v) = json(&["pin-sign", "--n", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["sign"], -1);
    assert_eq!(v["clifford"], -1);
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, _, stderr) = run(&["pin-sign", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("odd"));
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["h2", "--group", "catalog:nope"]).0, 2);
    assert_eq!(run(&["suite", "--criterion", "11"]).0, 2);
}

#[test]
fn cohomology_commands() {
    let (_, v) = json(&["h2", "--group", "catalog:sym:4"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    let (_, v) = json(&["kers", "--group", "catalog:Z4xZ2"]);
    assert!(v["dim"].as_u64().unwrap() > 0);
    let (_, v) = json(&["extension", "--group", "catalog:cyclic:2", "--cocycle", "basis:0"]);
    assert_eq!(v["total_order"], 4);
    assert_eq!(v["total_involutions"], 1);
    assert_eq!(v["split"], false);
    let (_, v) = json(&["pin-cocycle", "--group", "catalog:cyclic:4"]);
    assert_eq!(v["diagonal"], serde_json::json!([true]));
    assert_eq!(v["cocycle"].as_array().unwrap().len(), 4);
    let (_, v) = json(&["pin-cocycle", "--group", "catalog:sym:4", "--involutions-only"]);
    assert_eq!(v["cocycle"], Value::Null);
    assert_eq!(v["two_lift_property"], true);
    let (_, v) = json(&["group", "--group", "perms:(0 1 2 3),(0 2)"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["regular_rep_in_alternating"], true);
}

#[test]
fn cocycle_files_are_read() {
    let dir = std::env::temp_dir().join(format!("traceform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.txt");
    std::fs::write(&path, "00\n01\n").unwrap();
    let (code, v) = json(&["extension", "--group", "catalog:cyclic:2", "--cocycle", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["total_involutions"], 1);
    std::fs::write(&path, "0\n1\n").unwrap();
    assert_eq!(run(&["extension", "--group", "catalog:cyclic:2", "--cocycle", path.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn forms_and_trace_forms() {
    let (_, v) = json(&["form", "--entries", "1,-1", "--compare", "2,-2"]);
    assert_eq!(v["isometric"], true);
    let (_, v) = json(&["form", "--gram", "[[0,1],[1,0]]"]);
    assert_eq!(v["signature"], serde_json::json!([1, 1]));
    let (_, v) = json(&["trace", "--poly", "1,0,-2"]);
    assert_eq!(v["entries"], serde_json::json!(["2", "4"]));
    assert_eq!(v["disc"], "2");
    let (_, v) = json(&["trace", "--algebra", r#"[{"poly": [1, 0, 1], "multiplicity": 2}]"#]);
    assert_eq!(v["rank"], 4);
}

#[test]
fn verification_verdicts_drive_the_exit_code() {
    let (code, v) = json(&["verify", "main", "--fixture", "mq_real"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    let (code, v) = json(&["classify", "--fixture", "c8_imag"]);
    assert_eq!(code, 0);
    assert_eq!(v["statement"], "cor-numb2-iv");
    // A descriptor that wrongly claims a non-cyclic Sylow subgroup.
    let bad = r#"{"order": 4, "sylow_cyclic": false, "two_reduced": true}"#;
    let (code, v) = json(&["verify", "ww1", "--poly", "1,0,-4,0,2", "--descriptor", bad]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    let (code, v) = json(&["verify", "two-cyclic", "--fixture", "c4x_compositum"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn suite_is_deterministic() {
    let a = run(&["suite", "--criterion", "9"]);
    let b = run(&["suite", "--criterion", "9"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let c = run(&["--seed", "7", "suite", "--criterion", "9"]);
    assert_eq!(c.0, 0);
    assert_ne!(a.1, c.1);
    let (code, pretty, _) = run(&["--pretty", "suite", "--criterion", "1"]);
    assert_eq!(code, 0);
    assert!(pretty.contains("PASS"));
}
