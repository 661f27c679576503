use std::process::{Command, Output};

use serde_json::Value;

fn freediv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freediv")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = freediv(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn analyze_arrangement() {
    let v = json(&["analyze", "x*y*z*(x+y+z)", "--vars", "x,y,z", "--json"]);
    assert_eq!(v["free"], false);
    assert_eq!(v["gradient"]["st"], 1);
    assert_eq!(v["gradient"]["regularity"], 3);
    assert_eq!(v["linear_type"]["verdict"], true);
    assert_eq!(v["timings"], Value::Null);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "input", "ring", "reduced", "homogeneous", "weights", "gradient", "free", "linear_type", "syzygetic",
        "koszul_saturation", "koszul_free", "cramer", "timings",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn family_quintic() {
    let v = json(&["family", "quintic_plus", "--d", "5", "--a", "1,1,1,1", "--json"]);
    assert_eq!(v["report"]["free"], true);
    assert_eq!(v["report"]["linear_type"]["verdict"], true);
    assert_eq!(v["discrepancies"], serde_json::json!([]));
}

#[test]
fn json_is_reproducible() {
    let args = ["analyze", "x*y*z*(x+y)*(x+z)*(y+z)", "--json", "--seed", "3"];
    assert_eq!(freediv(&args).stdout, freediv(&args).stdout);
}

#[test]
fn timings_only_on_request() {
    let v = json(&["analyze", "x*y*(x+y)", "--json", "--timings"]);
    assert!(v["timings"].is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(freediv(&["family", "cayley"]).status.code(), Some(2));
    assert_eq!(freediv(&["analyze", "x+w"]).status.code(), Some(2));
    assert_eq!(freediv(&["family", "quintic_plus", "--d", "4"]).status.code(), Some(2));
    assert_eq!(freediv(&["cramer", "x*(x^2+y*z)"]).status.code(), Some(2));
    assert_ne!(freediv(&["analyze"]).status.code(), Some(0));
    // A negative verdict is still a computed verdict.
    assert_eq!(freediv(&["check-free", "x^2+y*z"]).status.code(), Some(0));
}

#[test]
fn single_checks() {
    assert_eq!(json(&["check-free", "x+2*y-3*z", "--json"])["free"], true);
    let sat = json(&["saturation", "x*(x^2+y*z)", "--json"]);
    assert_eq!(sat["exponent"], 2);
    assert_eq!(sat["indeg"], 1);
    let lt = json(&["check-linear-type", "x*y*z*(x+y+z)", "--route", "both", "--json"]);
    assert_eq!(lt["linear_type"], true);
    assert_eq!(lt["route"], "both");
    assert_eq!(json(&["check-syzygetic", "x^6+x^3*y^3+x^2*y^4+y^5*z", "--json"])["syzygetic"], false);
    assert_eq!(json(&["check-koszul-free", "x*y*(x+y)*(x+y*z)", "--json"])["koszul_free"], false);
    let c = json(&["cramer", "x*y*z*(x+y)*(x+z)*(y+z)", "--json"]);
    assert_eq!(c["gsc"], true);
    assert_eq!(c["pivot_degree"], 6);
}

#[test]
fn resolve_ideal() {
    let v = json(&["resolve", "x^2;x*y;y^2", "--ideal", "--vars", "x,y", "--json"]);
    assert_eq!(v["betti"], serde_json::json!({"1": {"2": 3}, "2": {"3": 2}}));
    assert_eq!(v["regularity"], 1);
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("freediv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = freediv(&["analyze", "x*y*(x+y)", "--json", "--out", path.to_str().unwrap()]);
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_subset() {
    let out = freediv(&["corpus", "--criteria", "1,12"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("[PASS]  1"));
    assert!(text.contains("[PASS] 12"));
    assert!(text.contains("2 of 2 criteria passed"));
    assert_eq!(freediv(&["corpus", "--criteria", "99"]).status.code(), Some(2));
}
