use std::path::PathBuf;
use std::process::{Command, Output};

fn relcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relcat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn examples() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-examples");
    let o = relcat(&["init-examples", "--dir", dir.to_str().unwrap(), "--force"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    dir
}

fn strip_elapsed(text: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn eval_prints_row_layout() {
    let o = relcat(&["eval", "lub(E, X) ; conv(C)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1 0)\n");
    let o = relcat(&["eval", "C"]);
    assert_eq!(stdout(&o), "(0 1)\n(0 0)\n");
}

#[test]
fn paper_example_exit_codes() {
    let o = relcat(&["paper-example"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(X;C^T)**"));
    let dir = examples();
    let tampered = dir.join("tampered.json");
    let text = std::fs::read_to_string(dir.join("paper3chain.json")).unwrap();
    let bad = text.replacen("\"u\"]]", "\"1\"]]", 1);
    assert_ne!(bad, text);
    std::fs::write(&tampered, bad).unwrap();
    let o = relcat(&["paper-example", "--model", tampered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = examples();
    let paper = dir.join("paper3chain.json");
    let o = relcat(&["check", "--model", paper.to_str().unwrap(), "--laws", "downClosedNoStar,downClosed"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("EXPECTED-FAIL-CONFIRMED downClosedNoStar"), "{out}");
    assert!(out.contains("X = (0 u)"), "{out}");

    let bool2 = dir.join("bool2.json");
    let o = relcat(&["check", "--model", bool2.to_str().unwrap(), "--laws", "schroeder", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = strip_elapsed(&stdout(&o));
    assert_eq!(v["tool"], "relcat");
    assert_eq!(v["results"][0]["status"], "PASS");
    assert_eq!(v["results"][0]["report"]["assignments"], 4096);

    let o = relcat(&["check", "--model", bool2.to_str().unwrap(), "--laws", "products6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("RELCAT_CAP"));
    let o = Command::new(env!("CARGO_BIN_EXE_relcat"))
        .args(["check", "--model", bool2.to_str().unwrap(), "--laws", "schroeder"])
        .env("RELCAT_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(relcat(&["check", "--model", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(relcat(&["check", "--model", bool2.to_str().unwrap(), "--laws", "bogus"]).status.code(), Some(2));
}

#[test]
fn json_reports_ignore_worker_count() {
    let dir = examples();
    let chain3 = dir.join("chain3.json");
    let run = |workers: &str| {
        let o = relcat(&[
            "check", "--model", chain3.to_str().unwrap(), "--laws", "products1,schroeder,downClosed", "--strategy",
            "random", "--samples", "200", "--seed", "42", "--workers", workers, "--format", "json",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        strip_elapsed(&stdout(&o))
    };
    let one = run("1");
    assert_eq!(one["seed"], 42);
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
}

#[test]
fn search_exit_codes() {
    let o = relcat(&["search", "--law", "downClosedNoStar"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("VIOLATION chain:3 |B|=2 |A|=1"), "{}", stdout(&o));
    let o = relcat(&["search", "--law", "downClosed", "--lattices", "chain:2,chain:3", "--max-carrier", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_relcat"))
        .args(["search", "--law", "schroeder", "--lattices", "chain:4"])
        .env("RELCAT_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--strategy random"));
}

#[test]
fn laws_and_usage() {
    let o = relcat(&["laws", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["laws"].as_array().unwrap().iter().any(|l| l["id"] == "downClosedNoStar"));
    assert_eq!(relcat(&[]).status.code(), Some(2));
    assert_eq!(relcat(&["check", "--model", "x", "--strategy", "random"]).status.code(), Some(2));
}
