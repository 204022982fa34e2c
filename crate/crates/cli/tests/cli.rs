use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn bo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bo")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["--output", &p, "construct"];
    full.extend_from_slice(args);
    let o = bo(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = construct(dir.path(), "k4.json", &["mk4"]);
    let o = bo(&["check", &k4, "--property", "bo"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["certificate"]["blocking"]["shape"], "K_{2,2}");

    let u = construct(dir.path(), "u.json", &["uniform", "2", "4"]);
    assert_eq!(bo(&["check", &u, "--property", "sbo"]).status.code(), Some(0));

    let b = construct(dir.path(), "b.json", &["mbeta", "2", "1,1,1,1"]);
    assert_eq!(bo(&["check", &b, "--property", "kbo=1"]).status.code(), Some(0));
    assert_eq!(bo(&["check", &b, "--property", "kbo=2"]).status.code(), Some(1));

    assert_eq!(bo(&["check", &b, "--property", "nope"]).status.code(), Some(2));
    assert_eq!(bo(&["check", "/no/such/file", "--property", "bo"]).status.code(), Some(2));
    assert_eq!(bo(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_presentation_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    // two rank-1 flats whose meet is a set of rank 1 with non-matching closure
    std::fs::write(
        &p,
        r#"{"ground":["a","b","c"],"cyclic_flats":[{"set":[],"rank":0},{"set":["a","b"],"rank":2},{"set":["a","b","c"],"rank":1}]}"#,
    )
    .unwrap();
    let o = bo(&["check", p.to_str().unwrap(), "--property", "bo"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Z"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn construct_uniform_and_errors() {
    let o = bo(&["construct", "uniform", "2", "4"]);
    let v = json(&o);
    assert_eq!(v["cyclic_flats"].as_array().unwrap().len(), 2);
    assert_eq!(v["provenance"]["family"], "uniform");
    let bad = bo(&["construct", "malpha", "2,1,1,1,1,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn mdelta_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("d3.json");
    std::fs::write(&g, r#"{"r":3,"s":2,"t":2,"orientation":[[true,false],[false,true]]}"#).unwrap();
    let o = bo(&["construct", "mdelta", g.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["ground"].as_array().unwrap().len(), 6);
}

#[test]
fn table1_rank_seven() {
    let o = bo(&["table1", "--rank", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o)["rows"].clone();
    let got: Vec<(u64, u64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["no_obstruction"].as_u64().unwrap(), r["with_obstruction"].as_u64().unwrap()))
        .collect();
    assert_eq!(got, vec![(3, 0), (34, 0), (43, 1)]);
    assert_eq!(bo(&["table1", "--rank", "8", "--verify"]).status.code(), Some(2));
    assert_eq!(bo(&["table1", "--rank", "10"]).status.code(), Some(2));
}

#[test]
fn table1_verify_rank_three() {
    let o = bo(&["table1", "--rank", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json(&o)["verification"][0];
    assert_eq!(v["excluded_minor_bo"], true);
    assert_eq!(v["excluded_minor_sbo"], true);
}

#[test]
fn enumerate_is_jsonl() {
    let o = bo(&["enumerate-critical", "--rank", "6"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 17);
    assert!(lines.iter().all(|l| l["has_obstruction"] == false));
}

#[test]
fn catalog_roundtrip_and_job_independence() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert!(bo(&["--jobs", "1", "catalog", "build", a]).status.success());
    assert!(bo(&["--jobs", "3", "catalog", "build", b]).status.success());
    let d = bo(&["catalog", "diff", a, b]);
    assert_eq!(d.status.code(), Some(0));
    assert_eq!(json(&d)["changed_records"].as_array().unwrap().len(), 0);
    let idx_a = std::fs::read(Path::new(a).join("index.jsonl")).unwrap();
    let idx_b = std::fs::read(Path::new(b).join("index.jsonl")).unwrap();
    assert_eq!(idx_a, idx_b);

    let q = bo(&["catalog", "query", a, "--property", "bo", "--verdict", "false"]);
    let hits = json(&q);
    let mdelta = hits.as_array().unwrap().iter().filter(|h| h["family"] == "mdelta").count();
    assert_eq!(mdelta, 1 + 1 + 5 + 17);

    let c = dir.path().join("c");
    let c = c.to_str().unwrap();
    assert!(bo(&["catalog", "build", c, "--beta-max-k", "2"]).status.success());
    assert_eq!(bo(&["catalog", "diff", a, c]).status.code(), Some(1));
}

#[test]
fn jobs_do_not_change_reports() {
    let one = bo(&["--jobs", "1", "table1", "--rank", "5", "--verify"]);
    let four = bo(&["--jobs", "4", "table1", "--rank", "5", "--verify"]);
    assert_eq!(one.stdout, four.stdout);
    assert!(!one.stdout.is_empty());
}
