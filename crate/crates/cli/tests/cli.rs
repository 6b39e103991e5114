use std::io::Write;
use std::process::{Command, Output, Stdio};

fn asmlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asmlat")).args(args).output().expect("binary runs")
}

fn asmlat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asmlat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts() {
    let o = asmlat(&["enumerate", "--n", "4", "--mask", "2", "--format", "count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "14");
    let o = asmlat(&["enumerate", "--n", "3", "--format", "count"]);
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn enumerate_json_and_csv() {
    let o = asmlat(&["enumerate", "--n", "3"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0]["rows"], serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));

    let o = asmlat(&["enumerate", "--n", "2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,a1_1,a1_2,a2_1,a2_2"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn verify_all_small() {
    let o = asmlat(&["verify", "--suite", "all", "--max-n", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let records: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_rejects_large_sizes() {
    assert_eq!(asmlat(&["verify", "--max-n", "9"]).status.code(), Some(3));
    assert_eq!(asmlat(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn hasse_writes_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.dot");
    let o = asmlat(&["hasse", "--n", "4", "--mask", "2", "--dot", path.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 14);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 20);
}

#[test]
fn convert_between_representations() {
    let a = r#"{"n":3,"rows":[[0,1,0],[1,-1,1],[0,1,0]]}"#;
    let o = asmlat_stdin(&["convert", "--from", "asm", "--to", "mt"], a);
    assert!(o.status.success());
    let tri: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();

    let back = asmlat_stdin(&["convert", "--from", "mt", "--to", "asm"], &tri.to_string());
    let back: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(back, serde_json::from_str::<serde_json::Value>(a).unwrap());

    let o = asmlat_stdin(&["convert", "--from", "asm", "--to", "perm"], a);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(err["error"], "NotAPermutation");
}

#[test]
fn convert_six_vertex_fixture() {
    let a = include_str!("../../core/tests/fixtures/six_vertex_asm.json");
    let state = include_str!("../../core/tests/fixtures/six_vertex_state.json");
    let o = asmlat_stdin(&["convert", "--from", "asm", "--to", "sixvertex"], a);
    assert!(o.status.success());
    let got: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(got, serde_json::from_str::<serde_json::Value>(state).unwrap());

    let o = asmlat_stdin(&["convert", "--from", "sixvertex", "--to", "asm"], state);
    let got: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(got, serde_json::from_str::<serde_json::Value>(a).unwrap());
}

#[test]
fn convert_rejects_malformed_input() {
    let o = asmlat_stdin(&["convert", "--from", "asm", "--to", "mt"], r#"{"n":2,"rows":[[1,1],[0,0]]}"#);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(err["error"].is_string());
    let o = asmlat_stdin(&["convert", "--from", "perm", "--to", "asm"], "not json");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counts_table() {
    let o = asmlat(&["counts", "--max-t", "4", "--max-n", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("t,n,count,closed_form,match\n"));
    assert!(text.lines().any(|l| l == "3,5,30,30,true"));
    assert!(text.lines().any(|l| l == "4,6,406,406,true"));
}

#[test]
fn identity_round_trips_through_every_format() {
    let start = r#"{"n":3,"rows":[[1,0,0],[0,1,0],[0,0,1]]}"#;
    for via in ["asm", "mt", "sixvertex", "perm"] {
        let o = asmlat_stdin(&["convert", "--from", "asm", "--to", via], start);
        assert!(o.status.success(), "to {via}");
        let back = asmlat_stdin(&["convert", "--from", via, "--to", "asm"], &stdout(&o));
        assert!(back.status.success(), "from {via}");
        assert_eq!(stdout(&back).trim(), start);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--n", "4", "--mask", "1,3"];
    let first = asmlat(&args);
    assert_eq!(first.stdout, asmlat(&args).stdout);
    let single = asmlat(&["enumerate", "--n", "1"]);
    assert_eq!(stdout(&single).lines().count(), 1);
}
