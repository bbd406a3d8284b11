use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_table() {
    let o = run(&["check", fixture("torus2loop.rg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("eulerian      yes"), "{out}");
    assert!(out.contains("checkerboard  no"), "{out}");
}

#[test]
fn theorem2_on_torus() {
    let o = run(&["theorem2", fixture("torus2loop.rg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("inconsistent         {a, b}"), "{out}");
    assert!(out.contains("result checkerboard  yes"), "{out}");
    assert!(out.contains("edge a: -") && out.contains("edge b: -"), "{out}");
}

#[test]
fn theorem2_rejects_odd_degree() {
    let p = scratch("path.rg", "vertex u: e.1\nvertex v: e.2\nedge e: +\n");
    let o = run(&["theorem2", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn theorem1_prints_certificate() {
    let p = scratch("twisted_loop.rg", "vertex v: e.1 e.2\nedge e: -\n");
    let o = run(&["theorem1", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("petrial set  {e}"), "{out}");
    assert!(out.contains("colouring    red blue"), "{out}");
}

#[test]
fn parse_errors_have_positions() {
    let p = scratch("bad.rg", "vertex v: a.1 a.2\nedge a: *\n");
    let o = run(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.rg:2:9:"), "{err}");
}

#[test]
fn iso_exit_codes() {
    let t = fixture("torus2loop.rg");
    let t = t.to_str().unwrap();
    let o = run(&["iso", t, t]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "isomorphic");
    let p = scratch("sphere.rg", "vertex v: a.1 a.2 b.1 b.2\nedge a: +\nedge b: +\n");
    let o = run(&["iso", t, p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn operators() {
    let t = fixture("torus2loop.rg");
    let t = t.to_str().unwrap();
    let o = run(&["op", t, "--ppetrial", "a,b"]);
    assert_eq!(stdout(&o), "vertex v: a.1 b.1 a.2 b.2\nedge a: -\nedge b: -\n");
    let o = run(&["op", t, "--delete", "b"]);
    assert_eq!(stdout(&o), "vertex v: a.1 a.2\nedge a: +\n");
    let o = run(&["op", t, "--dual"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["op", t, "--word", "a:x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["op", t, "--dual", "--petrial"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["op", t, "--pdual", "zz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn medial_dot() {
    let o = run(&["medial", fixture("torus2loop.rg").to_str().unwrap(), "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("digraph medial {"));
    assert_eq!(out.matches("->").count(), 4);
    let p = scratch("mobius.rg", "vertex v: e.1 e.2\nedge e: -\n");
    let o = run(&["medial", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--max-edges", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "58");
    let o = run(&["enumerate", "--min-edges", "1", "--max-edges", "1", "--connected"]);
    assert_eq!(stdout(&o).matches("vertex").count(), 1 + 1 + 2);
    let o = run(&["enumerate", "--max-edges", "7", "--count"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_small() {
    let o = run(&["verify", "all", "--max-edges", "2", "--json", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() > 20);
    assert!(reports.iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
    let o = run(&["verify", "no-such-property"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counterexample_search() {
    let o = run(&["counterexample", "--max-edges", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["set"], serde_json::json!(["e0", "e2"]));
}
