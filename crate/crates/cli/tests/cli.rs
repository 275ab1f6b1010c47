use std::io::Write;
use std::process::{Command, Output};

use milnor_cli::CurveReport;

fn milnor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_text_and_json() {
    let o = milnor(&["analyze", "--expr", "x^4+x^3z+y^2z^2", "--name", "q"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("exponents (2,2,3)"), "{text}");
    assert!(text.contains("0 -> S(-7) -> S(-5)^2 + S(-6) -> S(-3)^3 -> S"), "{text}");

    let o = milnor(&["--json", "analyze", "--expr", "x^4+x^3z+y^2z^2", "--name", "q"]);
    assert_eq!(code(&o), 0);
    let json = stdout(&o);
    let r: CurveReport = serde_json::from_str(&json).unwrap();
    assert_eq!(r.tau_oracle, 5);
    assert!(r.classification.mpog);
    assert_eq!(r.to_json() + "\n", json);
}

#[test]
fn fields_give_same_invariants() {
    let a: CurveReport = serde_json::from_str(&stdout(&milnor(&["--json", "analyze", "--expr", "x^5+xyz^3+y^5"]))).unwrap();
    let b: CurveReport =
        serde_json::from_str(&stdout(&milnor(&["--json", "--field", "fp:32003", "analyze", "--expr", "x^5+xyz^3+y^5"]))).unwrap();
    assert_eq!(b.field, "fp:32003");
    assert_eq!((a.exponents, a.epsilons, a.tau_oracle), (b.exponents, b.epsilons, b.tau_oracle));
}

#[test]
fn batch_file_keeps_order() {
    let f = temp_file("# curves\nb: x^5+y^5+z^5\na: xyz\n\nc: x^4+x^3z+y^2z^2  # quartic\n");
    let o = milnor(&["--json", "analyze", "--file", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let list: Vec<CurveReport> = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<_> = list.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["b", "a", "c"]);
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&milnor(&["analyze", "--expr", "x^2+y"])), 1);
    assert_eq!(code(&milnor(&["analyze", "--expr", "x^2*y"])), 2);
    assert_eq!(code(&milnor(&["--field", "fp:100", "analyze", "--expr", "xyz"])), 1);
    assert_eq!(code(&milnor(&["frobnicate"])), 1);
    assert_eq!(code(&milnor(&["analyze", "--file", "/nonexistent/curves.txt"])), 1);
    assert_eq!(code(&milnor(&["corpus", "--only", "nope"])), 1);
    assert_eq!(code(&milnor(&["--help"])), 0);
}

#[test]
fn validate_exit_codes() {
    let bad = temp_file(r#"[{"exponents":[3,8,8,15],"epsilons":[1,1]}]"#);
    let o = milnor(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("E = -1"));

    let good = temp_file(r#"[{"exponents":[2,2,3],"epsilons":[1]},{"exponents":[4,4,4,4,4,4],"epsilons":[1,1,1,1]}]"#);
    assert_eq!(code(&milnor(&["validate", good.path().to_str().unwrap()])), 0);

    let junk = temp_file(r#"[{"exponents":[2,2,3]}]"#);
    assert_eq!(code(&milnor(&["validate", junk.path().to_str().unwrap()])), 1);
}

#[test]
fn enumerate_commands() {
    let o = milnor(&["--json", "enumerate", "partitions", "--t", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 16);
    assert_eq!(v["partitions"][1], serde_json::json!([4, 1]));

    let o = milnor(&["--json", "enumerate", "admissible", "--d", "5", "--t", "4"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let has = |e: serde_json::Value| v["candidates"].as_array().unwrap().iter().any(|c| c["exponents"] == e);
    assert!(has(serde_json::json!([4, 4, 4, 4, 4, 4])));

    assert_eq!(code(&milnor(&["enumerate", "partitions", "--t", "0"])), 1);
    assert_eq!(code(&milnor(&["enumerate", "admissible", "--d", "9", "--t", "4", "--budget", "1"])), 1);
}

#[test]
fn corpus_subset() {
    let o = milnor(&["corpus", "--only", "free-triangle", "--only", "quartic-mpog"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("PASS  free-triangle"));
    assert!(text.ends_with("2/2 passed [rational]\n"), "{text}");
}
