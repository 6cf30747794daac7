use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffclass")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, name: &str, spec: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut args = vec!["construct"];
    args.extend(spec);
    args.extend(["-o", &path]);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn construct_then_classify_reports_gagola() {
    let dir = tempfile::tempdir().unwrap();
    let d8 = construct(dir.path(), "d8.pgrp", &["dihedral", "8"]);
    let text = std::fs::read_to_string(&d8).unwrap();
    assert!(text.starts_with("# family: dihedral 8\n"));
    let o = run(&["classify", &d8]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Gagola: yes"));
    let o = run(&["classify", "--json", &d8]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["camina_center"], true);
}

#[test]
fn verify_exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let sl = construct(dir.path(), "sl2_3.pgrp", &["sl2", "3"]);
    let o = run(&["verify", &sl, "thm4.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("applicable=true holds=true"));

    let a5 = construct(dir.path(), "a5.pgrp", &["alternating", "5"]);
    let o = run(&["verify", &a5, "thm4.2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no witness"));

    let o = run(&["verify", &a5, "thm9.9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn strict_mode_fails_on_skipped_cross_checks() {
    let dir = tempfile::tempdir().unwrap();
    let sl = construct(dir.path(), "sl2_3.pgrp", &["sl2", "3"]);
    let o = run(&["--max-order", "10", "verify", &sl, "thm4.1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--strict", "--max-order", "10", "verify", &sl, "thm4.1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--strict", "--max-order", "10", "classify", &sl]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.pgrp");
    std::fs::write(&bad, "# header\n3\n1\n0 1 1\n").unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    let o = run(&["chartab", dir.path().join("missing.pgrp").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chartab_prints_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = construct(dir.path(), "s3.pgrp", &["symmetric", "3"]);
    let out = dir.path().join("table.txt");
    let o = run(&["chartab", &s3, "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("order 6  exponent 6  Dixon prime "));
    assert_eq!(text.lines().filter(|l| l.starts_with("X.")).count(), 3);
}

#[test]
fn scan_empty_and_unreadable() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("groups\t0"));

    construct(dir.path(), "b_d8.pgrp", &["dihedral", "8"]);
    construct(dir.path(), "c_q8.pgrp", &["generalized_quaternion", "8"]);
    std::fs::write(dir.path().join("a_broken.pgrp"), "not a group\n").unwrap();
    let o = run(&["scan", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("unreadable\ta_broken.pgrp"));
    assert!(text.contains("gagola groups of order 8\t2"));
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("b_d8.pgrp\t"), "{first}");
}
