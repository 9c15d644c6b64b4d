use std::io::Write;
use std::process::{Command, Output, Stdio};

fn monopos(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monopos"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const PETERSEN: &str = "IheA@GUAo";

#[test]
fn compute_default_parameter_from_stdin() {
    let o = monopos(&["--format", "json", "compute", "-"], PETERSEN);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["parameter"], "mp");
    assert_eq!(v[0]["value"], 3);
}

#[test]
fn compute_named_parameters() {
    let o = monopos(&["--format", "json", "compute", "-", "--param", "gp,gp2,hm"], PETERSEN);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<_> = json(&o).as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values[0], 6);
    assert_eq!(values.len(), 3);
    let o = monopos(&["compute", "-", "--mode", "geo", "--independent"], "C~");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("igp = 1"));
}

#[test]
fn compute_all_and_edge_lists() {
    let o = monopos(&["--format", "json", "compute", "-", "--param", "all"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v.as_object().unwrap().len() >= 5);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(monopos(&["compute", "-"], "C~x").status.code(), Some(2));
    assert_eq!(monopos(&["compute", "-", "--param", "nope"], "C~").status.code(), Some(2));
    assert_eq!(monopos(&["compute", "/nonexistent.g6"], "").status.code(), Some(2));
    assert_eq!(monopos(&["family", "nosuch:3"], "").status.code(), Some(2));
    assert_eq!(monopos(&["reduce", "-", "--k", "9"], "C~").status.code(), Some(2));
    assert_eq!(monopos(&["paths", "-", "--from", "0", "--to", "7"], "C~").status.code(), Some(2));
    let o = monopos(&["verify", "--check", "no-such-check"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn caps_exit_3() {
    assert_eq!(monopos(&["compute", "-", "--cap", "5"], PETERSEN).status.code(), Some(3));
    assert_eq!(monopos(&["oracle", "-"], "N~~~~~~~~~~~~~~~~~w").status.code(), Some(3));
    assert_eq!(monopos(&["reduce", "-", "--k", "2"], "J~~~~~~~~~_").status.code(), Some(3));
}

#[test]
fn oracle_matches_solver() {
    let a = json(&monopos(&["--format", "json", "oracle", "-", "--mode", "geo"], PETERSEN));
    let b = json(&monopos(&["--format", "json", "compute", "-", "--mode", "geo"], PETERSEN));
    assert_eq!(a["value"], b[0]["value"]);
}

#[test]
fn family_writes_sidecars() {
    let dir = std::env::temp_dir().join(format!("monopos-cli-{}", std::process::id()));
    let o = monopos(&["family", "random_tree:8", "--seed", "5", "--out", dir.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let g6 = std::fs::read_to_string(dir.join("random_tree_8_seed_5.g6")).unwrap();
    assert_eq!(g6.trim(), stdout(&o).lines().next().unwrap());
    let side: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("random_tree_8_seed_5.json")).unwrap()).unwrap();
    assert_eq!(side["order"], 8);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reduce_reports_verdict() {
    let o = monopos(&["--format", "json", "reduce", "-", "--k", "3"], "Dhc");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"]["mp_product"], 7);
    assert_eq!(v["verdict"]["clique_answer"], false);
    assert_eq!(v["holds"], true);
}

#[test]
fn paths_intervals_and_hull() {
    let o = monopos(&["paths", "-", "--from", "0", "--to", "3"], "Dhc");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(2 induced paths)"));
    let o = monopos(&["--format", "json", "paths", "-", "--hull", "0,2"], "Dhc");
    let v = json(&o);
    assert_eq!(v[0]["hull"].as_array().unwrap().len(), 5);
    let o = monopos(&["paths", "-"], "Bg");
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn verify_subset_is_deterministic() {
    let args = ["--format", "json", "verify", "--check", "cubic-cages", "--check", "graph6-round-trip", "--no-timing"];
    let a = monopos(&args, "");
    let b = monopos(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["totals"]["checks"], 2);
}

#[test]
fn verify_failure_exits_1() {
    let o = monopos(&["verify", "--check", "r-graph-dissociation-2-position"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
