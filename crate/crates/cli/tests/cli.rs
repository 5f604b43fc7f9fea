use std::process::{Command, Output};

use serde_json::Value;

fn pinlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinlift"))
        .args(args)
        .env_remove("PINLIFT_FREUDENTHAL_CAP")
        .output()
        .expect("binary runs")
}

fn schema() -> jsonschema::JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/report.schema.json");
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&raw)
        .expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let s = schema();
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errs) => errs.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    panic!("schema violations: {msgs:?}\n{v}");
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = pinlift(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&v);
    v
}

fn text(args: &[&str]) -> String {
    let out = pinlift(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn o8_standard_check() {
    let v = json(&["check", "--group", "O:8", "--weight", "1,0,0,0", "--sign", "+"]);
    let p = &v["payload"];
    assert_eq!(p["spinorial"], false);
    assert_eq!(p["q"], "1");
    assert_eq!(p["m"], 1);
    assert_eq!(p["chi_g0"], "6");
    assert_eq!(p["casimir_trace"], "7/12");
    assert_eq!(v["request"]["weight"], "1,0,0,0");
    let minus = json(&["check", "--group", "O:8", "--weight", "1,0,0,0", "--sign", "-"]);
    assert_eq!(minus["payload"]["m"], 7);
    assert_eq!(minus["payload"]["chi_g0"], "-6");
}

#[test]
fn trivial_rep_is_spinorial() {
    let v = json(&["check", "--group", "O:8", "--weight", "0,0,0,0"]);
    assert_eq!(v["payload"]["spinorial"], true);
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w.as_str().unwrap().contains("--sign")));
}

#[test]
fn fold_d4() {
    let v = json(&["fold", "--group", "G:D4xC2"]);
    assert_eq!(v["payload"]["folded"], "B3");
    assert_eq!(v["payload"]["rho_tau"], "3,2,1");
    assert_eq!(json(&["fold", "--group", "G:E6xC2"])["payload"]["folded"], "F4");
    assert_eq!(json(&["fold", "--group", "G:A4xC2"])["payload"]["folded"], "BC2");
}

#[test]
fn text_matches_json() {
    let args = ["check", "--group", "O:7", "--weight", "1,1,0", "--rho", "sgn"];
    let v = json(&args);
    let t = text(&args);
    for (k, val) in v["payload"].as_object().unwrap() {
        match val {
            Value::String(s) => assert!(t.contains(&format!("{k}={s}\n")), "{k}"),
            Value::Object(_) => {}
            other => assert!(t.contains(&format!("{k}={other}\n")), "{k}"),
        }
    }
}

#[test]
fn stiefel_whitney() {
    let v = json(&["sw", "--group", "O:8", "--weight", "1,0,0,0", "--sign", "+"]);
    let p = &v["payload"];
    assert_eq!(p["w1"]["c"], 1);
    assert_eq!((p["w2"]["a"].as_u64(), p["w2"]["b"].as_u64()), (Some(1), Some(0)));
    assert_eq!(p["obstruction_vanishes"], false);
    assert_eq!(p["klein"]["chars"], serde_json::json!([8, 6, 4, 6]));
    assert_eq!((p["klein"]["beta2"].as_u64(), p["klein"]["alphabeta"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn twisted_characters() {
    let v = json(&["twisted-char", "--group", "G:D4xC2", "--weight", "1,0,0,0", "--sign", "-"]);
    assert_eq!(v["payload"]["chi_g0"], "-6");
    assert_eq!(v["payload"]["twisted_character"], "6");
    let v = json(&["twisted-char", "--group", "G:A2xC2", "--weight", "1,0,-1", "--sign", "+"]);
    assert_eq!(v["payload"]["twisted_character"], "2");
    // induced representations have no twisted character
    assert_eq!(pinlift(&["twisted-char", "--group", "O:8", "--weight", "1,1,1,1"]).status.code(), Some(1));
}

#[test]
fn char_criterion_routes() {
    let v = json(&["char-criterion", "--chars", "8,6,4"]);
    assert_eq!(v["payload"]["spinorial"], false);
    let v = json(&["char-criterion", "--group", "O:8", "--weight", "1,1,0,0", "--sign", "+"]);
    assert_eq!(v["payload"]["spinorial"], v["payload"]["check_spinorial"]);
    assert_eq!(pinlift(&["char-criterion", "--chars", "8,5,4"]).status.code(), Some(1));
}

#[test]
fn table_streams_lines() {
    let out = text(&["table", "--group", "O:6", "--bound", "1", "--format", "json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() >= 5);
    for l in &lines {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_valid(&v);
        assert_eq!(v["command"], "table");
    }
    let again = text(&["table", "--group", "O:6", "--bound", "1", "--format", "json"]);
    assert_eq!(out, again);
    let o2 = text(&["table", "--group", "O:2", "--bound", "3"]);
    assert_eq!(o2.lines().count(), 5);
}

#[test]
fn validate_subset() {
    let v = json(&["validate", "--only", "golden,o2"]);
    let crits = v["payload"]["criteria"].as_array().unwrap();
    assert_eq!(crits.len(), 2);
    assert_eq!(v["payload"]["all_passed"], true);
}

#[test]
fn validate_failure_exit_code() {
    let out = pinlift(&["validate", "--only", "o4"]);
    let passed = String::from_utf8_lossy(&out.stdout).contains("all_passed=true");
    assert_eq!(out.status.code(), Some(if passed { 0 } else { 3 }));
}

#[test]
fn exit_codes() {
    assert_eq!(pinlift(&["check", "--group", "O:8", "--weight", "1,0,0"]).status.code(), Some(1));
    assert_eq!(pinlift(&["check", "--group", "Q:8", "--weight", "1"]).status.code(), Some(1));
    assert_eq!(pinlift(&["check", "--group", "O:8"]).status.code(), Some(1));
    assert_eq!(pinlift(&["check", "--group", "G:B3xC2", "--weight", "1,0,0"]).status.code(), Some(1));
    assert_eq!(pinlift(&["--help"]).status.code(), Some(0));
    let capped = Command::new(env!("CARGO_BIN_EXE_pinlift"))
        .args(["sw", "--group", "O:8", "--weight", "2,2,0,0", "--sign", "+", "--format", "json"])
        .env("PINLIFT_FREUDENTHAL_CAP", "10")
        .output()
        .unwrap();
    assert!(capped.status.success());
    let v: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert!(v["payload"].get("klein").is_none());
    let bad_cap = Command::new(env!("CARGO_BIN_EXE_pinlift"))
        .args(["check", "--group", "O:8", "--weight", "1,0,0,0"])
        .env("PINLIFT_FREUDENTHAL_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_cap.status.code(), Some(1));
}

#[test]
fn schema_rejects_malformed_reports() {
    let mut v = json(&["check", "--group", "O:8", "--weight", "1,0,0,0", "--sign", "+"]);
    v["payload"]["q"] = serde_json::json!(1.0);
    assert!(!schema().is_valid(&v));
    let mut v = json(&["fold", "--group", "G:D4xC2"]);
    v["schema_version"] = serde_json::json!("0");
    assert!(!schema().is_valid(&v));
}
