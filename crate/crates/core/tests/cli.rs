use std::path::PathBuf;
use std::process::{Command, Output};

fn hdialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdialg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hdialg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_passing_entry() {
    let o = hdialg(&["verify", "catalog:Hd2.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5/5 axioms pass"));
}

#[test]
fn verify_failing_entry_exits_one() {
    let o = hdialg(&["verify", "catalog:Hd2.2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).contains("5/5"));
}

#[test]
fn missing_file_and_unknown_entry_exit_two() {
    for target in ["nonexistent.alg", "catalog:Hd9.9"] {
        let o = hdialg(&["verify", target]);
        assert_eq!(o.status.code(), Some(2), "{target}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(hdialg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn der_prints_dimension_and_basis() {
    let o = hdialg(&["der", "catalog:Hd2.4", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dimension 1"), "{out}");
    assert!(out.contains("[ 0  1 ]\n[ 0  0 ]"), "{out}");
}

#[test]
fn json_output_parses() {
    let o = hdialg(&["--json", "der", "catalog:Hd2.4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 1);
    let o = hdialg(&["--json", "verify", "catalog:Hd2.5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn centroid_variants() {
    let linear = stdout(&hdialg(&["cent", "catalog:Hd2.5", "--variant", "linear"]));
    let full = stdout(&hdialg(&["cent", "catalog:Hd2.5", "--variant", "full"]));
    assert!(linear.contains('1'));
    assert!(!full.is_empty());
    assert_eq!(hdialg(&["cent", "catalog:Hd2.5", "--variant", "bogus"]).status.code(), Some(2));
}

#[test]
fn compare_distinguishes_by_fingerprint() {
    let o = hdialg(&["cmp", "catalog:Hd2.1", "catalog:Hd2.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NON_ISOMORPHIC"));
    let o = hdialg(&["cmp", "catalog:Hd2.4", "catalog:Hd2.4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn transport_then_compare_round_trip() {
    let o = hdialg(&["transport", "catalog:Hd2.4", "--random", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("moved.alg");
    std::fs::write(&path, &o.stdout).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(hdialg(&["verify", path]).status.code(), Some(0));
    let o = hdialg(&["cmp", "catalog:Hd2.4", path, "--search-iso"]);
    assert!(stdout(&o).contains("ISOMORPHIC"), "{}", stdout(&o));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn transport_with_matrix_file() {
    let m = scratch("phi.txt");
    std::fs::write(&m, "1 1\n0 1\n").unwrap();
    let o = hdialg(&["transport", "catalog:Hd2.5", "--matrix", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("algebra "));
    std::fs::write(&m, "1 1\n1 1\n").unwrap();
    assert_eq!(hdialg(&["transport", "catalog:Hd2.5", "--matrix", m.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn catalog_list_and_fingerprint() {
    let list = stdout(&hdialg(&["catalog", "list"]));
    assert!(list.contains("Hd2.4") && list.contains("zin2.1") && list.contains("dip3.1"));
    let fp = hdialg(&["fp", "catalog:Hd3.1"]);
    assert_eq!(fp.status.code(), Some(0));
    assert!(stdout(&fp).contains("rank α"));
}

#[test]
fn constructions_report_hypothesis_failures() {
    // The catalog Zinbiel tables fail their own identities, so the hypothesis check reports it.
    let o = hdialg(&["construct", "zinbiel2dend", "catalog:zin2.1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not Hom-Zinbiel"));
    assert_eq!(hdialg(&["construct", "diptwist", "catalog:Hd2.1"]).status.code(), Some(2));
    let o = hdialg(&["construct", "untwist", "catalog:Hd2.4"]);
    assert!(stdout(&o).starts_with("algebra "));
}
