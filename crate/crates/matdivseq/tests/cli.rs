use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const X3: &str = r#"{"matrix": [[1,-2,-6],[0,1,3],[-1,0,1]]}"#;
const X4_TEXT: &str = "-1 2 4 -1\n0 1 -2 2\n-1 0 -1 0\n0 1 0 1\n";

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matdivseq"))
        .arg(args[0])
        .arg(file)
        .args(&args[1..])
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn text_table_with_factorization() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x3.json", X3);
    let o = run(&["table", "--n-max", "3", "--factor"], &f);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3], "3 | 6561 | 3^8");
}

#[test]
fn csv_table() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x4.txt", X4_TEXT);
    let o = run(&["table", "--n-max", "2", "--format", "csv"], &f);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[1..], ["1,1", "2,65536"]);
}

#[test]
fn json_table_identity() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i2.txt", "1 0\n0 1\n");
    let o = run(&["table", "--n-max", "1", "--format", "json"], &f);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["n"], 1);
    assert_eq!(entries[0]["reduced"], "1");
    assert_eq!(entries[0]["d_jac"], "1");
    assert_eq!(entries[0]["fallback_used"], true);
}

#[test]
fn formats_agree_on_values() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x3.json", X3);
    let text = stdout(&run(&["table", "--n-max", "10", "--factor"], &f));
    let csv = stdout(&run(&["table", "--n-max", "10", "--factor", "--format", "csv"], &f));
    let json: Value = serde_json::from_str(&stdout(&run(&["table", "--n-max", "10", "--factor", "--format", "json"], &f))).unwrap();
    let from_text: Vec<(String, String)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let parts: Vec<&str> = l.split(" | ").collect();
            (parts[1].to_string(), parts[2].to_string())
        })
        .collect();
    let from_csv: Vec<(String, String)> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let parts: Vec<&str> = l.split(',').collect();
            (parts[1].to_string(), parts[2].to_string())
        })
        .collect();
    let from_json: Vec<(String, String)> = json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_str().unwrap().to_string(), e["factorization"]["text"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(from_text.len(), 10);
    assert_eq!(from_text, from_csv);
    assert_eq!(from_text, from_json);
}

#[test]
fn jacobian_column() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x3.json", X3);
    let out = stdout(&run(&["table", "--n-max", "2", "--column", "jacobian", "--format", "csv"], &f));
    assert_eq!(out.lines().nth(2), Some("2,800"));
}

#[test]
fn verify_examples_pass() {
    let dir = TempDir::new().unwrap();
    let f3 = write(&dir, "x3.json", X3);
    let o = run(&["verify", "--n-max", "8"], &f3);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[informational]"));
    assert!(out.contains("result: PASS"));

    let f4 = write(&dir, "x4.txt", X4_TEXT);
    let o = run(&["verify", "--n-max", "6"], &f4);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_json_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x3.json", X3);
    let o = run(&["verify", "--n-max", "4", "--format", "json", "--column", "reduced"], &f);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["closed_form_mismatches"].as_array().unwrap().len(), 0);
    let notes = v["literal_discrepancies"].as_array().unwrap();
    assert_eq!(notes[0]["n"], 2);
    assert_eq!(notes[0]["oracle"], "800");
    assert_eq!(notes[0]["literal"], "400");
    assert!(v["divisibility"].as_array().unwrap().iter().all(|c| c["column"] == "reduced"));
}

#[test]
fn verify_jordan_block() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "j.txt", "2 1 0\n0 2 1\n0 0 2\n");
    let o = run(&["verify", "--n-max", "12"], &f);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("repeated eigenvalue"));
}

#[test]
fn charpoly_and_jacobian() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "x3.json", X3);
    let out = stdout(&run(&["charpoly"], &f));
    assert!(out.starts_with("coefficients: [1, -3, -3, -1]\n"), "{out}");
    let i2 = write(&dir, "i2.json", r#"{"matrix": [[1,0],[0,1]]}"#);
    let v: Value = serde_json::from_str(&stdout(&run(&["charpoly", "--format", "json"], &i2))).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "-2", "1"]));

    let o = run(&["jacobian", "--n", "2", "--format", "json"], &f);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["det"], "800");
    assert_eq!(v["jacobian"].as_array().unwrap().len(), 9);
    let text = stdout(&run(&["jacobian", "--n", "2"], &f));
    assert!(text.trim_end().ends_with("det = 800"));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let corrupt = write(&dir, "bad.json", r#"{"matrix": [[1,2],[3"#);
    let o = run(&["verify"], &corrupt);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let ragged = write(&dir, "ragged.json", r#"{"matrix": [[1,2],[3]]}"#);
    let o = run(&["table"], &ragged);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("matrix must be square"));

    let float = write(&dir, "float.json", r#"{"matrix": [[1.5]]}"#);
    let o = run(&["charpoly"], &float);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integer entries required"));

    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["table"], &missing).status.code(), Some(2));

    let ok = write(&dir, "x3.json", X3);
    assert_eq!(run(&["table", "--n-max", "0"], &ok).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "xml"], &ok).status.code(), Some(2));
}
