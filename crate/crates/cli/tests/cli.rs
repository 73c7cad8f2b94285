use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sortsubst")).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sortsubst"))
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

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_prints_the_type() {
    let o = run(&["check", "--ctx", "[o -> o, o]", "--term", "`#1 `#0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "o\n");
    let o = run(&["check", "--ctx", "[]", "--term", "\\(o -> o). \\(o). `#1 `#0"]);
    assert_eq!(stdout(&o), "(o -> o) -> o -> o\n");
    let o = run(&["check", "--ctx", "[o]", "--term", "(p1 id)[id]", "--explicit"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "o\n".to_string()));
}

#[test]
fn check_rejects_bad_input_without_crashing() {
    for (ctx, term, what) in [
        ("[o]", "#1", "type error"),
        ("[o]", "`#0 `#0", "type error"),
        ("[o]", "\\(o. #0", "syntax error"),
        ("[o", "#0", "syntax error"),
        ("[o]", "", "syntax error"),
    ] {
        let o = run(&["check", "--ctx", ctx, "--term", term]);
        assert_eq!(o.status.code(), Some(1), "{term}");
        assert!(stderr(&o).contains(what), "{term}: {}", stderr(&o));
        assert!(stdout(&o).is_empty());
    }
}

#[test]
fn norm_example() {
    let o = run(&["norm", "--ctx", "[]", "--term", "\\(o). p1 id"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "\\(o). `#0\n");
}

#[test]
fn eq_exit_codes() {
    let o = run(&["eq", "--ctx", "[o]", "--lhs", "(p1 id)[id]", "--rhs", "p1 id"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EQUAL\nlhs: `#0\nrhs: `#0\n");
    let o = run(&["eq", "--ctx", "[o, o]", "--lhs", "p1 id", "--rhs", "p1 p0 id"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("DISTINCT\n"));
    let o = run(&["eq", "--ctx", "[o]", "--lhs", "p1 id", "--rhs", "p1 eps"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dash_reads_standard_input() {
    let o = run_with_stdin(&["norm", "--ctx", "[o]", "--term", "-"], "(p1 id)[(eps, p1 id)]\n");
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "`#0\n".to_string()));
}

#[test]
fn laws_json_report() {
    let o = run(&[
        "laws",
        "--max-ctx-len",
        "1",
        "--max-expr-size",
        "3",
        "--max-itm-size",
        "3",
        "--law",
        "[id]",
        "--law",
        "stab",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 2);
    assert_eq!(items[0]["law"], "[id]");
    assert!(items[0]["checked"].as_u64().unwrap() > 0);
    assert!(items[0].get("counterexample").is_none());
    assert!(items[0].get("elapsed_ms").is_none());

    let o = run(&["laws", "--max-ctx-len", "1", "--max-expr-size", "3", "--law", "stab", "--json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["elapsed_ms"].is_u64());
}

#[test]
fn laws_rejects_unknown_names() {
    let o = run(&["laws", "--law", "no-such-law"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no-such-law"));
}

#[test]
fn bench_reports_both_engines() {
    let o = run(&["bench", "--sizes", "10,100", "--seed", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(r["factored"]["visits"].as_u64().unwrap() > 0);
        assert!(r["naive"]["visits"].as_u64().unwrap() > 0);
    }
    let o = run(&["bench", "--sizes", "10"]);
    assert!(stdout(&o).contains("outputs identical"));
}
