mod checks;

use std::time::Instant;

use checks::protocol;
use morphweave::harness::{ExecutionJob, ProcessSandbox, Sandbox, VerdictStatus};

#[test]
fn canned_jobs_are_bit_exact() {
    protocol::canned_jobs_are_bit_exact();
}

#[test]
fn malformed_lines_get_error_verdicts() {
    protocol::malformed_lines_get_error_verdicts();
}

#[test]
fn survives_a_thousand_error_jobs() {
    protocol::survives_a_thousand_error_jobs();
}

#[test]
fn replies_keep_request_order() {
    protocol::replies_keep_request_order();
}

#[cfg(unix)]
#[test]
fn process_sandbox_kills_a_silent_runner() {
    // echoes a canned verdict unless the job asks it to hang
    let script = r#"while IFS= read -r line; do
  case "$line" in
    *hang*) sleep 30 ;;
    *) printf '{"id":7,"status":"pass","detail":""}\n' ;;
  esac
done"#;
    let mut sb = ProcessSandbox::new(vec!["sh".into(), "-c".into(), script.into()]).unwrap();
    sb.grace = std::time::Duration::from_millis(100);
    let job = |src: &str| ExecutionJob {
        id: serde_json::json!(7),
        function_source: src.into(),
        test_source: String::new(),
        timeout_ms: 100,
        memory_limit_mb: 64,
    };
    assert_eq!(sb.run(&job("ok")).unwrap().status, VerdictStatus::Pass);
    let t = Instant::now();
    assert_eq!(sb.run(&job("hang")).unwrap().status, VerdictStatus::Timeout);
    assert!(t.elapsed().as_secs() < 5);
    // a fresh runner takes over
    assert_eq!(sb.run(&job("ok")).unwrap().status, VerdictStatus::Pass);
}
