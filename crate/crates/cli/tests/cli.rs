use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lando_core::survey::{build_g, build_h};

fn lando(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lando"))
        .args(args)
        .env_remove("LANDO_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_g_against_h() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", &build_g().to_string());
    let h = write(dir.path(), "h.txt", &build_h().to_string());
    let o = lando(&["check", "--a", s(&g), "--b", s(&h)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("VERDICT unfriendly\nSTATS nodes="));
}

#[test]
fn check_tree_against_itself_prints_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", &build_g().to_string());
    let o = lando(&["check", "--a", s(&g), "--b", s(&g), "--witness"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "VERDICT friendly");
    assert!(lines[1].starts_with("WITNESS "));
    assert_eq!(lines[1].split_whitespace().count(), 8);
    assert!(out.ends_with('\n'));
    let again = lando(&["check", "--a", s(&g), "--b", s(&g), "--witness"]);
    assert_eq!(stdout(&again), out);
}

#[test]
fn check_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let cyc = write(dir.path(), "c.txt", "V 3\nE 0 1\nE 1 2\nE 2 0\n");
    let o = lando(&["check", "--a", s(&cyc), "--b", s(&cyc)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("cycle"), "{}", stderr(&o));

    let a = write(dir.path(), "a.txt", "V 3\nE 0 1\nE 1 2\n");
    let b = write(dir.path(), "b.txt", "V 2\nE 0 1\n");
    let o = lando(&["check", "--a", s(&a), "--b", s(&b)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("mismatch"));

    let junk = write(dir.path(), "j.txt", "hello\n");
    assert!(!lando(&["check", "--a", s(&junk), "--b", s(&a)])
        .status
        .success());
    assert!(!lando(&["check", "--a", "/nonexistent", "--b", s(&a)])
        .status
        .success());
}

#[test]
fn survey_of_the_empty_tree() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r0.txt");
    let o = lando(&["survey", "--edges", "0", "--out", s(&out), "--jobs", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("SURVEY edges=0 trees=1 pairs=1\n"));
    assert!(text.contains("\nPAIR 0 0 () () friendly\n"));
    assert!(text.contains("SUMMARY friendly=1 unfriendly=0 seconds="));
}

#[test]
fn survey_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    assert!(!lando(&["survey", "--edges", "9", "--out", s(&out)])
        .status
        .success());
    assert!(
        !lando(&["survey", "--edges", "2", "--out", s(&out), "--jobs", "0"])
            .status
            .success()
    );
    let missing = dir.path().join("no/such/dir/r.txt");
    let o = lando(&["survey", "--edges", "2", "--out", s(&missing)]);
    assert!(!o.status.success());
    assert!(!out.exists());
}

#[test]
fn survey_jobs_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = Command::new(env!("CARGO_BIN_EXE_lando"))
        .args(["survey", "--edges", "3", "--out", s(&out)])
        .env("LANDO_JOBS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "SURVEY edges=3 trees=2 pairs=3 friendly=3 unfriendly=0\n"
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_lando"))
        .args(["survey", "--edges", "3", "--out", s(&out)])
        .env("LANDO_JOBS", "0")
        .output()
        .unwrap();
    assert!(!bad.status.success());
}

#[test]
fn verify_theorem1_default_and_recheck() {
    let o = lando(&["verify-theorem1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("G -> H: VERDICT unfriendly"));
    assert!(out.contains("H -> G: VERDICT unfriendly"));
    assert!(!out.contains("RECHECK"));

    let o = lando(&["verify-theorem1", "--recheck"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("RECHECK G -> H: checked=5040 realizable=0\n"));
    assert!(out.contains("RECHECK H -> G: checked=5040 realizable=0\n"));
}

#[test]
fn verify_theorem1_detects_a_tampered_fixture() {
    let dir = tempfile::tempdir().unwrap();
    // G in place of H: a friendly pair
    let g = write(dir.path(), "g.txt", &build_g().to_string());
    let o = lando(&["verify-theorem1", "--h", s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("THEOREM1 FAILED"));

    let broken = write(dir.path(), "b.txt", "V 8\nE 0 1\n");
    let o = lando(&["verify-theorem1", "--g", s(&broken)]);
    assert!(!o.status.success());
}

#[test]
fn dual_of_nesting_files() {
    let dir = tempfile::tempdir().unwrap();
    let siblings = write(dir.path(), "s.txt", "C 0 -\nC 1 -\nC 2 -\n");
    let o = lando(&["dual", "--nesting", s(&siblings)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "V 4\nE 0 1\nE 0 2\nE 0 3\n");

    let nested = write(dir.path(), "n.txt", "C 0 -\nC 1 0\nC 2 1\n");
    assert_eq!(
        stdout(&lando(&["dual", "--nesting", s(&nested)])),
        "V 4\nE 0 1\nE 1 2\nE 2 3\n"
    );

    let empty = write(dir.path(), "e.txt", "");
    assert_eq!(stdout(&lando(&["dual", "--nesting", s(&empty)])), "V 1\n");

    let cyclic = write(dir.path(), "c.txt", "C 0 1\nC 1 0\n");
    let o = lando(&["dual", "--nesting", s(&cyclic)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("cycle"));
}

#[test]
fn enumerate_listing() {
    let o = lando(&["enumerate", "--edges", "3"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "--- 0\n((())())\nV 4\nE 0 1\nE 1 2\nE 0 3\n--- 1\n(()()())\nV 4\nE 0 1\nE 0 2\nE 0 3\n"
    );
    let seven = stdout(&lando(&["enumerate", "--edges", "7"]));
    assert_eq!(seven.matches("--- ").count(), 23);
    assert_eq!(stdout(&lando(&["enumerate", "--edges", "7"])), seven);
    assert!(!lando(&["enumerate", "--edges", "13"]).status.success());
}
