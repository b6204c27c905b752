use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doublealg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn config(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const D4: &str = "[group] family=dicyclic n=2\n[params] alpha=1 beta=1 gamma=-1 u1=1 u2=1 u3=1 u4=1\n[limits] degree=8\n";
const D8: &str = "[group] family=dicyclic n=4\n[params] alpha=1 beta=-1 gamma=1 u1=i u2=2 u3=1 u4=-1\n";

#[test]
fn fuse_example() {
    let o = run(&["fuse", "dicyclic:2", "17", "20"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "V11 + V13");
    let v = json(&["fuse", "dicyclic:2", "17", "20"]);
    assert_eq!(v["summary"], "V11 + V13");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn simples_lists_every_module() {
    let o = run(&["simples", "dicyclic:2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('V')).count(), 22);
    assert_eq!(json(&["simples", "s3"])["count"], 8);
    assert_eq!(json(&["simples", "dicyclic:4"])["count"], 46);
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["smatrix", "s3", "--format", "json"], vec!["faithful-search", "dicyclic:2"]] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn census_counts() {
    let v = json(&["faithful-search", "dicyclic:2"]);
    for c in v["censuses"].as_array().unwrap() {
        assert_eq!(c["k_min"], 3);
        assert_eq!(c["count"], 224);
    }
    let o = run(&["faithful-search", "dicyclic:2", "--sum", "17,20,21"]);
    assert!(o.status.success());
    let o = run(&["faithful-search", "dicyclic:2", "--sum", "0,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn default_algebra_check_passes() {
    let f = config(D4);
    let o = run(&["algebra", "check", f.path().to_str().unwrap(), "--seed", "11"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks pass"));
    let f = config(D8);
    let v = json(&["algebra", "check", f.path().to_str().unwrap()]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn failing_check_exits_one() {
    let f = config("[algebra] family=s3 candidate=v0v3\n[limits] degree=4\n");
    let o = run(&["algebra", "check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["fuse", "dicyclic:2", "17", "99"]).status.code(), Some(2));
    assert_eq!(run(&["simples", "octahedral"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let f = config("[params] delta=3\n");
    assert_eq!(run(&["hdet", f.path().to_str().unwrap()]).status.code(), Some(2));
    let f = config(D4);
    assert_eq!(run(&["hdet", f.path().to_str().unwrap(), "--params", "alpha=2"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "orbit-sum", "--exponent", "1,2"]).status.code(), Some(2));
}

#[test]
fn homological_determinants() {
    let f = config(D4);
    let p = f.path().to_str().unwrap();
    let v = json(&["hdet", p, "--params", "alpha=-1,beta=-1,gamma=-1"]);
    assert_eq!(v["values"]["r"], "1");
    assert_eq!(v["values"]["s"], "-1");
    let f = config(D8);
    let v = json(&["hdet", f.path().to_str().unwrap()]);
    assert_eq!(v["values"]["r"], "1");
    assert_eq!(v["values"]["s"], "-1");
}

#[test]
fn superpotential_and_nakayama() {
    let f = config(D4);
    let v = json(&["superpotential", f.path().to_str().unwrap()]);
    assert_eq!(v["dual_top_dimensions"].as_array().unwrap().len(), 7);
    assert_eq!(v["identity_grade"], true);
    let v = json(&["nakayama", f.path().to_str().unwrap()]);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 6);
    for (k, row) in m.iter().enumerate() {
        assert_eq!(row[k], "-1");
    }
}

#[test]
fn invariant_commands() {
    let v = json(&["invariants", "basis", "--degree", "4"]);
    assert_eq!(v["dimension"], 9);
    let v = json(&["invariants", "orbit-sum", "--exponent", "0,0,1,1,0,0"]);
    assert_eq!(v["in_x"], true);
    assert_eq!(v["invariant"], true);
    let o = run(&["invariants", "generators", "--verify", "--degree", "10"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("generation certified"));
    let v = json(&["invariants", "generators"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 17);
}
