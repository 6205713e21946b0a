//! Exit codes and edge cases of the binary.

use std::path::Path;
use std::process::{Command, Output};

fn copy_tree(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for e in std::fs::read_dir(from).unwrap() {
        let e = e.unwrap();
        let dst = to.join(e.file_name());
        if e.file_type().unwrap().is_dir() {
            copy_tree(&e.path(), &dst);
        } else {
            std::fs::copy(e.path(), dst).unwrap();
        }
    }
}

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    copy_tree(&Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"), dir.path());
    dir
}

fn mw(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphweave"))
        .current_dir(dir)
        .env("RUST_LOG", "error")
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn unknown_cpat_exits_one_with_json_error() {
    let dir = workspace();
    let o = mw(dir.path(), &["gen-tests", "--cpat", "cpat-99"]);
    assert_eq!(code(&o), 1);
    let err: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(err["error"], "cpat");
}

#[test]
fn expand_needs_tests_first() {
    let dir = workspace();
    let o = mw(dir.path(), &["expand", "--cpat", "cpat-1"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("gen-tests"));
}

#[test]
fn dry_run_writes_nothing() {
    let dir = workspace();
    let o = mw(dir.path(), &["expand", "--dry-run"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let plan: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(plan.as_array().unwrap().len(), 10);
    assert_eq!(plan[0]["prompt_units"].as_array().unwrap().len(), 6);
    assert!(plan[0]["prompt_units"].as_array().unwrap().iter().all(|u| u["cached"] == true));
    assert!(!dir.path().join("out").exists());
}

#[test]
fn apply_exit_codes() {
    let dir = workspace();
    // no rules yet
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-4"]);
    assert_eq!(code(&o), 1);
    let empty = dir.path().join("empty-rules");
    std::fs::create_dir_all(&empty).unwrap();
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-4", "--rules", "empty-rules"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("apply"));

    for cmd in [&["gen-tests", "--cpat", "cpat-4"][..], &["expand", "--cpat", "cpat-4"], &["synth", "--cpat", "cpat-4"]] {
        let o = mw(dir.path(), cmd);
        assert_eq!(code(&o), 0, "{:?}: {}", cmd, stderr(&o));
    }
    let stubs = "--stubs=corpus/stubs/cpat-4.json";
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-4", "--cpat", "cpat-4", stubs]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("+++ b/"));
    // the other CPAT's corpus has nothing this rule set matches
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-9", "--cpat", "cpat-4", stubs]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o), "");

    let before = std::fs::read_to_string(dir.path().join("corpus/src/cpat-4/module_000.py")).unwrap();
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-4", "--cpat", "cpat-4", stubs, "--write", "--report", "counts.json"]);
    assert_eq!(code(&o), 2);
    let after = std::fs::read_to_string(dir.path().join("corpus/src/cpat-4/module_000.py")).unwrap();
    assert_ne!(before, after);
    let counts: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("counts.json")).unwrap()).unwrap();
    assert_eq!(counts.as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum::<u64>(), 12);
    // rewritten code no longer matches
    let o = mw(dir.path(), &["apply", "--target", "corpus/src/cpat-4", "--cpat", "cpat-4", stubs]);
    assert_eq!(code(&o), 0);
}

#[test]
fn tune_rejects_bad_input() {
    let dir = workspace();
    let o = mw(dir.path(), &["tune", "--delta", "0"]);
    assert_eq!(code(&o), 1);
    let bad = dir.path().join("bad-oracle");
    std::fs::create_dir_all(&bad).unwrap();
    std::fs::write(bad.join("cpat-1.json"), "{\"cpat_id\": \"cpat-1\", \"variants\": [").unwrap();
    let o = mw(dir.path(), &["tune", "--oracle", "bad-oracle"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn huge_delta_stops_at_first_iteration() {
    let dir = workspace();
    let o = mw(dir.path(), &["tune", "--delta", "1.0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains(" i = 1 "), "{}", stdout(&o));
}

#[test]
fn flag_conflicts_are_usage_errors() {
    let dir = workspace();
    assert_eq!(code(&mw(dir.path(), &["report", "--overwrite"])), 2);
    assert_eq!(code(&mw(dir.path(), &["report", "--record", "--replay-only"])), 2);
    assert_eq!(code(&mw(dir.path(), &["sandbox-serve"])), 1);
}

#[test]
fn record_needs_a_provider() {
    let dir = workspace();
    let o = mw(dir.path(), &["gen-tests", "--record", "--cpat", "cpat-1"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("provider"));
}

#[test]
fn missing_config_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let o = mw(dir.path(), &["report"]);
    assert_eq!(code(&o), 1);
    let err: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(err["error"], "config");
}
