use std::path::PathBuf;
use std::process::{Command, Output};

const A2: &str = "\
name a2
field F 2
quiver
  vertex 1
  vertex 2
  arrow a 1 2
relations
module P1
  dim 1=1 2=1
  map a [[1]]
module S
  dim 1=1 2=1
module S2
  dim 2=1
";

fn write_doc(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homolog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn homolog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homolog"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invariants_json_report() {
    let path = write_doc("a2.txt", A2);
    let out = homolog(&["invariants", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["algebra"]["name"], "a2");
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["loewy_length"], 2);
    assert_eq!(v["gldim"], 1);
    assert_eq!(v["selfinjective"], false);
    let again = homolog(&["invariants", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn bracket_oracle_answers() {
    let path = write_doc("a2.txt", A2);
    let p = path.to_str().unwrap();
    let out = homolog(&[
        "oracle",
        "bracket",
        p,
        "--module",
        "P1",
        "--generator",
        "S",
        "--level",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("yes\n"));
    let out = homolog(&[
        "oracle",
        "bracket",
        p,
        "--module",
        "P1",
        "--generator",
        "S",
        "--level",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "no\n");
    let out = homolog(&[
        "oracle",
        "bracket",
        p,
        "--module",
        "P1",
        "--generator",
        "S2",
        "--level",
        "1",
        "--mode",
        "summand",
        "--dim-cap",
        "2",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).starts_with("unknown"));
}

#[test]
fn it_check_exit_codes() {
    let path = write_doc("a2.txt", A2);
    let p = path.to_str().unwrap();
    let out = homolog(&["it-check", p, "--m", "0", "--n", "1", "--module", "S2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("verdict: verified on samples\n"));
    let out = homolog(&["it-check", p, "--m", "0", "--n", "0", "--module", "S2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).ends_with("verdict: refuted\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let path = write_doc("bad.txt", "field F 2\nquiver\n  vertex 1\n  arrow a 1 2\n");
    let out = homolog(&["invariants", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("4:13"), "{err}");
    let out = homolog(&["invariants", "/nonexistent/algebra.txt"]);
    assert_eq!(code(&out), 2);
    let out = homolog(&["check-corpus", "nonexistent"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn caps_exit_with_three() {
    let path = write_doc("a2.txt", A2);
    let out = homolog(&["syzygy-scan", path.to_str().unwrap(), "--dim-cap", "0"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn cutoff_skips_expectations() {
    let out = homolog(&["check-corpus", "beilinson-2", "--cutoff", "1"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"][0]["report"]["gldim"], ">1");
    assert!(v["summary"]["skipped"].as_u64().unwrap() >= 1);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn corpus_entry_passes() {
    let out = homolog(&["check-corpus", "a2"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
}
