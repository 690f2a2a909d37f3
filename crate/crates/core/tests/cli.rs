use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn mch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mch")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn multilink_of_shipped_generators() {
    for (name, want) in [("hopf.json", "1"), ("split.json", "0"), ("clasp_hopf.json", "2")] {
        let o = mch(&["multilink", "--input", fixture(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o).trim(), want, "{name}");
    }
}

#[test]
fn enumerate_counts() {
    let o = mch(&["enumerate", "--beta", "1", "--chi", "1", "--C", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 1);
    let o = mch(&["enumerate", "--beta", "0", "--chi", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 0);
}

#[test]
fn enumerate_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let out = dir.path().join(format!("g{i}.dot"));
            let o = mch(&["enumerate", "--beta", "2", "--chi", "0", "--format", "dot", "--out", out.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
            std::fs::read(out).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert!(String::from_utf8_lossy(&runs[0]).starts_with("// count 198"));
}

#[test]
fn exit_codes() {
    assert_eq!(mch(&["enumerate", "--beta", "1", "--chi", "1", "--C", "-1"]).status.code(), Some(1));
    assert_eq!(mch(&["enumerate", "--chi", "1", "--bogus"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let lattice = dir.path().join("flat.json");
    std::fs::write(&lattice, r#"{"rank":1,"boundary_matrix":[],"omega":["0"],"norm_weights":["1"]}"#).unwrap();
    let o = mch(&["enumerate", "--lattice", lattice.to_str().unwrap(), "--beta", "1", "--chi", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = mch(&["verify", fixture("tangency.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("transversality failure in ["));
}

#[test]
fn verify_one_pass_isotopy() {
    let o = mch(&["verify", "--input", fixture("one_pass.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lhs"], "1");
    assert_eq!(v["rhs"], "1");
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_suite_report_is_reproducible() {
    let a = mch(&["verify", "axioms", "--seed", "9", "--cases", "25"]);
    let b = mch(&["verify", "axioms", "--seed", "9", "--cases", "25"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed_cases"], 25);
}
