use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn swappoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swappoly")).args(args).output().expect("spawn swappoly")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("swappoly-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn verify_all_d2_passes() {
    let o = swappoly(&["verify", "all", "--d", "2", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let lines = json_lines(&o);
    assert!(!lines.is_empty());
    for l in &lines {
        assert_ne!(l["status"], "fail", "{l}");
        assert!(l["anchor"].as_str().is_some_and(|a| !a.is_empty()));
    }
}

#[test]
fn weingarten_scaled_d3_row() {
    let o = swappoly(&["weingarten", "--n", "4", "--d", "3", "--scaled", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<(String, String)> = stdout(&o)
        .lines()
        .map(|l| {
            let (a, b) = l.split_once('\t').unwrap();
            (a.to_string(), b.to_string())
        })
        .collect();
    let want = [("4", "37/15"), ("3,1", "-3/5"), ("2,2", "-11/5"), ("2,1,1", "-7/3"), ("1,1,1,1", "61/5")];
    assert_eq!(rows.len(), want.len());
    for (p, v) in want {
        assert!(rows.contains(&(p.to_string(), v.to_string())), "missing {p} {v}");
    }
}

#[test]
fn odd_coefficients_nonzero() {
    let o = swappoly(&["odd-coefficient", "--h-range", "2..6"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 5);
    for l in &lines {
        assert_eq!(l["status"], "pass");
        let value = l["measured"].as_array().unwrap().iter().find_map(|m| m.get("value")).unwrap();
        assert_ne!(value, "0");
    }
    assert!(stdout(&o).contains("-1867/105"));
}

#[test]
fn identity_tensor_is_not_swap() {
    let p = scratch("x1x1.poly", "1 x1 | x1\n");
    let o = swappoly(&["verify", "swap", "--poly", p.to_str().unwrap(), "--seed", "3"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_lines(&o)[0]["status"], "fail");
}

#[test]
fn emitted_p_verifies() {
    let o = swappoly(&["construct", "p", "--emit"]);
    assert_eq!(code(&o), 0);
    let p = scratch("p.poly", &stdout(&o));
    for what in ["swap", "central"] {
        let o = swappoly(&["verify", what, "--poly", p.to_str().unwrap(), "--seed", "5"]);
        assert_eq!(code(&o), 0, "{what}");
    }
}

#[test]
fn eval_commutator() {
    let p = scratch("c.poly", "1 x1.y1\n-1 y1.x1\n");
    let a = scratch("at.txt", "2 2\n1 2 3 4\n0 1 1 0\n");
    let o = swappoly(&["eval", "--poly", p.to_str().unwrap(), "--at", a.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0]["value"];
    assert_eq!(v, &serde_json::json!([["-1", "-3"], ["3", "1"]]));
    let bad = scratch("short.txt", "2 1\n1 2 3 4\n");
    let o = swappoly(&["eval", "--poly", p.to_str().unwrap(), "--at", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn refusals_exit_3() {
    let o = swappoly(&["construct", "capelli-swap", "--d", "3", "--seed", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("estimated"));
    let o = swappoly(&["construct", "regev", "--d", "4", "--seed", "1"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&swappoly(&["--bogus"])), 2);
    assert_eq!(code(&swappoly(&["verify", "all"])), 2);
    assert_eq!(code(&swappoly(&["construct", "even-swap", "--d", "3", "--seed", "1"])), 2);
    assert_eq!(code(&swappoly(&["odd-coefficient", "--h-range", "5..2"])), 2);
}

#[test]
fn findings_do_not_fail() {
    let o = swappoly(&["construct", "even-swap", "--d", "4", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_lines(&o)[0]["status"], "finding");
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "identities", "--d", "2", "--seed", "11"];
    let one = swappoly(&[&args[..], &["--threads", "1"]].concat());
    let eight = swappoly(&[&args[..], &["--threads", "8"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn list_checks_is_anchored() {
    let o = swappoly(&["--list-checks"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert!(lines.len() > 40);
    assert!(lines.iter().all(|l| l["anchor"].as_str().is_some_and(|a| !a.is_empty())));
}
