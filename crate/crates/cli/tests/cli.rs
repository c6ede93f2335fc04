use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pmtutte::polycore::parse_instance;
use serde_json::Value;

fn instances() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn instance(name: &str) -> String {
    instances().join(name).display().to_string()
}

fn pmtutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmtutte"))
        .args(args)
        .env_remove("PMTUTTE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jp_prints_sorted_triples() {
    let o = pmtutte(&["jp", &instance("worked.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let expected: Value = serde_json::from_str(
        "[[0,1,-1],[0,3,1],[1,1,-1],[1,2,3],[2,0,-1],[2,1,3],[3,0,1]]",
    )
    .unwrap();
    assert_eq!(v, expected);
}

#[test]
fn jp_human_and_factor() {
    let o = pmtutte(&["jp", &instance("worked.json"), "--human"]);
    assert_eq!(stdout(&o).trim(), "x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 - x*y - y");
    let o = pmtutte(&["jp", &instance("worked.json"), "--factor", "--human"]);
    assert_eq!(stdout(&o).trim(), "(x + y - 1)*(x^2 + 2*x*y + y^2 + y)");
    let o = pmtutte(&["cf", &instance("worked.json"), "--human"]);
    assert_eq!(stdout(&o).trim(), "x^2 + 2*x*y + y^2 + y");
}

#[test]
fn jp_log_has_one_line_per_basis() {
    let o = pmtutte(&["jp", &instance("worked.json"), "--log"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let first: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["basis"], serde_json::json!([0, 2, 1]));
    assert_eq!(first["internal"], serde_json::json!([1]));
}

#[test]
fn specialize_slices() {
    let o = pmtutte(&["specialize", &instance("worked.json"), "--y", "1/3"]);
    assert_eq!(stdout(&o).trim(), "x^3 - 8/27");
    let o = pmtutte(&["specialize", &instance("worked.json"), "--x", "0"]);
    assert_eq!(stdout(&o).trim(), "y^3 - y");
    let o = pmtutte(&["specialize", &instance("worked.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn interior_and_exterior() {
    let o = pmtutte(&["interior", &instance("worked.json")]);
    assert_eq!(stdout(&o).trim(), "2*x^2 + 2*x + 1");
    let o = pmtutte(&["exterior", &instance("worked.json")]);
    assert_eq!(stdout(&o).trim(), "y^2 + 3*y + 1");
    let o = pmtutte(&["interior", &instance("path-hypergraph.json")]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn bases_in_lex_order() {
    let o = pmtutte(&["bases", &instance("worked.json")]);
    assert_eq!(
        stdout(&o),
        "[0,2,1]\n[1,1,1]\n[1,2,0]\n[2,0,1]\n[2,1,0]\n"
    );
}

#[test]
fn verify_all_passes_on_every_instance() {
    for entry in fs::read_dir(instances()).unwrap() {
        let path = entry.unwrap().path();
        if path.file_stem().unwrap() == "not-submodular" {
            continue;
        }
        let o = pmtutte(&["verify", path.to_str().unwrap(), "--suite", "all"]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", path.display(), stdout(&o));
        assert!(stdout(&o).ends_with("0 failed\n"));
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    let o = pmtutte(&["verify", &instance("worked.json"), "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_reports_violations() {
    let o = pmtutte(&["validate", &instance("not-submodular.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["submodular"], Value::Bool(false));
    assert_eq!(v["witnesses"][0]["first"], serde_json::json!([1]));
    let o = pmtutte(&["validate", &instance("worked.json")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_reports_position() {
    let dir = std::env::temp_dir().join(format!("pmtutte-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    fs::write(&bad, "{\n  \"n\": 3,\n  \"rank\": [\n}").unwrap();
    let o = pmtutte(&["jp", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
    let o = pmtutte(&["jp", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn budget_exceeded_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_pmtutte"))
        .args(["jp", &instance("worked.json")])
        .env("PMTUTTE_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_pmtutte"))
        .args(["jp", &instance("worked.json")])
        .env("PMTUTTE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explore_finds_worked_failures() {
    let o = pmtutte(&[
        "explore",
        &instance("worked.json"),
        "--t-min",
        "-2",
        "--t-max",
        "5/6",
        "--step",
        "1/6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#"{"fixed":"y","slice":"x^3 - 8/27","support":[0,3],"t":"1/3"}"#));
    assert!(text.contains(r#"{"fixed":"x","slice":"y^3 - y","support":[1,3],"t":"0"}"#));
    let o = pmtutte(&[
        "explore",
        &instance("worked.json"),
        "--t-min",
        "1",
        "--t-max",
        "4",
        "--step",
        "1/6",
    ]);
    assert_eq!(stdout(&o), "");
}

#[test]
fn tutte_check() {
    let o = pmtutte(&["tutte-check", &instance("u24.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("T = x^2 + y^2 + 2*x + 2*y\n"));
    let o = pmtutte(&["tutte-check", &instance("worked.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn random_instances_and_suites() {
    let o = pmtutte(&["random", "--seed", "17", "--n", "4", "--kind", "hypergraph", "--count", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    for l in text.lines() {
        let doc = parse_instance(l).unwrap();
        assert_eq!(doc.build().unwrap().n(), 4);
    }
    let o = pmtutte(&["random", "--seed", "1", "--n", "4", "--count", "4", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = pmtutte(&["random", "--kind", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    let runs: [&[&str]; 3] = [
        &["verify", &instance("k4-hypergraph.json")],
        &["jp", &instance("k4-graphic.json"), "--log"],
        &["random", "--seed", "5", "--count", "5"],
    ];
    for args in runs {
        assert_eq!(pmtutte(args).stdout, pmtutte(args).stdout, "{args:?}");
    }
}

#[test]
fn instance_files_round_trip() {
    for entry in fs::read_dir(instances()).unwrap() {
        let path = entry.unwrap().path();
        let doc = parse_instance(&fs::read_to_string(&path).unwrap()).unwrap();
        let again = parse_instance(&doc.to_json()).unwrap();
        assert_eq!(doc, again, "{}", path.display());
        if let (Ok(a), Ok(b)) = (doc.build(), again.build()) {
            assert_eq!(a.rank(), b.rank());
        }
    }
}
