use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn qwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwl")).args(args).output().unwrap()
}

fn qwl_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qwl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_file(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

#[test]
fn expand_two_variables() {
    let o = qwl(&["expand", "--shape", "2", "--n", "2", "--method", "inv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x1^2 + (1+q) x1 x2 + x2^2\n");
    for method in ["quinv", "fermionic"] {
        assert_eq!(stdout(&qwl(&["expand", "--shape", "2", "--n", "2", "--method", method])), stdout(&o));
    }
    let schur = qwl(&["expand", "--shape", "2", "--n", "2", "--kind", "schur"]);
    assert_eq!(stdout(&schur), "x1^2 + x1 x2 + x2^2\n");
}

#[test]
fn verify_suite_passes() {
    let o = qwl(&["verify", "--suite", "bijection-roundtrip", "--max-cells", "6", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS bijection-roundtrip"));
    let all = qwl(&["verify", "--suite", "all", "--max-cells", "3", "--max-n", "3"]);
    assert_eq!(all.status.code(), Some(0));
    assert!(stdout(&all).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn inverse_bijection_reproduces_worked_example() {
    let o = qwl(&["bijection", "--stat", "quinv", "--dir", "inverse", "--input", &data("running_pop.json")]);
    assert!(o.status.success());
    let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(got, json_file("running_filling.json"));

    let fwd = qwl(&["bijection", "--stat", "quinv", "--input", &data("running_filling.json")]);
    let got: Value = serde_json::from_str(&stdout(&fwd)).unwrap();
    assert_eq!(got, json_file("running_pop.json"));
}

#[test]
fn omega_from_stdin() {
    let input = std::fs::read_to_string(data("running_filling.json")).unwrap();
    let o = qwl_stdin(&["bijection", "--dir", "omega"], &input);
    assert!(o.status.success());
    let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(got["rows"][0], serde_json::json!([2, 1, 1, 1, 3, 2, 1, 4, 4, 2]));
}

#[test]
fn dsplice_with_trace() {
    let o = qwl(&["dsplice", "--trace", "--input", &data("dsplice_input.json")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["n"], 5);
    assert_eq!(v["result"]["rows"][3], serde_json::json!([4, 5]));
    assert!(!v["steps"].as_array().unwrap().is_empty());
}

#[test]
fn clword_lines() {
    let o = qwl(&["clword", "--stat", "quinv", "--input", &data("small_filling.json")]);
    assert_eq!(stdout(&o), "quinv: (E_{2,1} ⊗ t^2)(E_{2,1} ⊗ t)(E_{3,2} ⊗ 1)(E_{4,2} ⊗ t)\n");
}

#[test]
fn render_text_matches_golden_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("qwl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("small.txt");
    let o = qwl(&["render", "--format", "text", "--input", &data("small_filling.json"), "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/small_example.txt");
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(golden).unwrap());
    let a = qwl(&["render", "--format", "svg", "--input", &data("running_filling.json")]);
    let b = qwl(&["render", "--format", "svg", "--input", &data("running_filling.json")]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches("<path").count(), 10);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn limit_agrees_and_reports_truncation_gaps() {
    let ok = qwl(&["limit", "--n", "2", "--qmax", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("diff: 0"));
    let short = qwl(&["limit", "--n", "2", "--qmax", "3", "--kmax", "0"]);
    assert_eq!(short.status.code(), Some(1));
    let witness: Value = serde_json::from_slice(&short.stderr).unwrap();
    assert_eq!(witness["k"], 0);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(qwl_stdin(&["bijection"], "{\"n\": 4").status.code(), Some(2));
    assert_eq!(qwl_stdin(&["bijection"], "{\"n\": 2, \"rows\": [[2], [1]]}").status.code(), Some(2));
    assert_eq!(qwl(&["expand", "--shape", "2,x", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qwl(&["expand", "--shape", "1,2", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qwl(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let render = qwl(&["render", "--format", "png", "--input", &data("small_filling.json")]);
    assert_eq!(render.status.code(), Some(2));
}
