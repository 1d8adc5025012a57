use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const K3: &str = "vertices a b c\nedge a b\nedge b c\nedge a c\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_adjmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tripartition_of_triangle() {
    assert_eq!(stdout(&["tripartition"], K3), "a: case3\nb: case3\nc: case3\n");
    assert_eq!(stdout(&["tripartition", "--vertex", "b"], K3), "b: case3\n");
}

#[test]
fn polynomials() {
    assert_eq!(stdout(&["interlace"], "vertices a b\n"), "y^2\n");
    assert_eq!(stdout(&["tutte"], K3), "x^2 + x + y\n");
    assert_eq!(stdout(&["tutte", "--polygon"], K3), "x^2 + x + y\n");
    for method in ["subset", "recursive", "lambda"] {
        assert_eq!(stdout(&["interlace", "--method", method], "vertices a b\nedge a b\n"), "x^2 - 2 x + 2 y\n");
    }
    let json: Value = serde_json::from_str(&stdout(&["--format", "json", "lambda"], K3)).unwrap();
    assert_eq!(json["polynomial"], "y - 1");
}

#[test]
fn minor_prints_route_and_circuits() {
    let out = stdout(&["minor", "--contract", "a"], K3);
    assert!(out.starts_with("route: local complement at b, a, then remove a\n"), "{out}");
    assert!(out.ends_with("circuits:\n{b,c}\n"), "{out}");
    let out = stdout(&["minor", "--delete", "a"], K3);
    assert!(out.starts_with("route: induced subgraph G - a\n"), "{out}");
    assert!(out.ends_with("circuits:\n"), "{out}");
}

#[test]
fn minor_needs_one_operation() {
    assert_eq!(run(&["minor"], K3).status.code(), Some(1));
    assert_eq!(run(&["minor", "--delete", "a", "--contract", "b"], K3).status.code(), Some(1));
}

#[test]
fn input_errors_exit_one() {
    let out = run(&["info"], "vertices a b c\nedge a d\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: unknown vertex `d`"));
    assert_eq!(run(&["info", "--input", "/nonexistent/graph.txt"], "").status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"], "").status.code(), Some(1));
    assert_eq!(run(&["realize"], "vertices a\n").status.code(), Some(1));
}

#[test]
fn multigraph_input_warns() {
    let out = run(&["info"], "vertices a b\nedge a b\nedge a b\n");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn realize_then_touchgraph() {
    let f = stdout(&["realize"], K3);
    assert!(f.starts_with("# transitions "));
    let tch = stdout(&["touchgraph"], &f);
    assert_eq!(tch, "vertices t0 t1 t2\nedge t0 t1 a~b\nedge t0 t2 a~c\nedge t1 t2 b~c\n");
    let simplified = stdout(&["tripartition"], &tch);
    assert_eq!(simplified.lines().count(), 3);
}

#[test]
fn json_graphs_reparse() {
    let looped = "vertices a b c d\nloop a\nedge a b\nedge c d\n";
    let r: Value = serde_json::from_str(&stdout(&["--format", "json", "realize"], looped)).unwrap();
    let graph = r["graph"].to_string();
    let t: Vec<String> = r["transitions"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let text_f = stdout(&["realize"], looped);
    let from_json = stdout(&["touchgraph", "--transitions", &t.join(",")], &graph);
    let from_text = stdout(&["touchgraph"], &text_f);
    assert_eq!(from_json, from_text);
    let tch_json = stdout(&["--format", "json", "touchgraph"], &text_f);
    assert_eq!(stdout(&["touchgraph", "--format", "json", "--transitions", &t.join(" ")], &graph), tch_json);
    // the touch-graph JSON is itself a graph document
    assert_eq!(stdout(&["info"], &tch_json), stdout(&["info"], &from_text));
}

#[test]
fn symmetrize_keeps_nullspace() {
    assert_eq!(stdout(&["symmetrize"], "110\n011\n"), "101\n011\n110\n");
}

#[test]
fn delta_of_triangle() {
    assert_eq!(
        stdout(&["delta"], K3),
        "feasible: {} {a,b} {a,c} {b,c}\nminimal: {}\nmaximal: {a,b} {a,c} {b,c}\n"
    );
}

#[test]
fn input_from_file() {
    let dir = std::env::temp_dir().join(format!("adjmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k3.txt");
    std::fs::write(&path, K3).unwrap();
    assert_eq!(stdout(&["circuits", "--input", path.to_str().unwrap()], ""), "{a,b,c}\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "poly", "--max-n", "5", "--trials", "10", "--seed", "3"];
    let first = stdout(&args, "");
    assert_eq!(first, stdout(&args, ""));
    assert!(first.ends_with(" failed\n") && first.contains(", 0 failed"));
    assert!(first.lines().any(|l| l.starts_with("PASS interlace-evaluators-agree")));
}

#[test]
fn trio_reports_the_odd_variant() {
    assert_eq!(
        stdout(&["trio", "--vertex", "a"], K3),
        "a: loop = loop_isolate, plain differs (nullity 0 vs 1)\n"
    );
}
