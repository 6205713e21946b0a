//! The newline-delimited JSON sandbox protocol.

use std::io::Cursor;
use std::time::Instant;

use morphweave::harness::{serve, ExecutionJob, InProcessSandbox};

pub const JOBS: &str = r#"{"id":1,"function_source":"def f(x):\n    return x + 1","test_source":"assert f(1) == 2"}
{"id":2,"function_source":"def f(x):\n    return x + 1","test_source":"assert f(1) == 3"}
{"id":3,"function_source":"def f(x):\n    return x +","test_source":"assert f(1) == 2"}
{"id":4,"function_source":"def f(x):\n    while True:\n        x = x + 1\n    return x","test_source":"assert f(1) == 2","timeout_ms":50}
"#;

pub const VERDICTS: &str = r#"{"id":1,"status":"pass","detail":""}
{"id":2,"status":"fail","detail":"AssertionError"}
{"id":3,"status":"error","detail":"SyntaxError: syntax error at line 2: expected expression (found newline)"}
{"id":4,"status":"timeout","detail":"exceeded 50 ms"}
"#;

fn run(input: &str) -> String {
    let mut out = Vec::new();
    serve(Cursor::new(input), &mut out, &InProcessSandbox).unwrap();
    String::from_utf8(out).unwrap()
}

pub fn canned_jobs_are_bit_exact() {
    let t = Instant::now();
    assert_eq!(run(JOBS), VERDICTS);
    assert!(t.elapsed().as_secs() < 30);
}

pub fn malformed_lines_get_error_verdicts() {
    let out = run("{\"id\":\"q\",\"function_source\":1}\nnot json\n\n");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with(r#"{"id":"q","status":"error","detail":"protocol error: "#));
    assert!(lines[1].starts_with(r#"{"id":null,"status":"error","detail":"protocol error: "#));
}

pub fn survives_a_thousand_error_jobs() {
    let mut input = String::new();
    for k in 0..1000 {
        match k % 3 {
            0 => input.push_str(&format!("{{\"id\":{},\"function_source\":\"def f(:\",\"test_source\":\"assert f()\"}}\n", k)),
            1 => input.push_str(&format!("{{\"id\":{},\"function_source\":\"def f():\\n    return 1 / 0\",\"test_source\":\"assert f() == 1\"}}\n", k)),
            _ => input.push_str(&format!("{{\"id\":{},\"oops\":true}}\n", k)),
        }
    }
    input.push_str(JOBS.lines().next().unwrap());
    input.push('\n');
    let out = run(&input);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1001);
    for (k, l) in lines[..1000].iter().enumerate() {
        assert!(l.starts_with(&format!("{{\"id\":{},\"status\":\"error\"", k)), "{}", l);
    }
    // still healthy afterwards
    assert_eq!(lines[1000], VERDICTS.lines().next().unwrap());
}

pub fn replies_keep_request_order() {
    let mut input = String::new();
    let mut want = Vec::new();
    for k in 0..200u32 {
        let (test, status) = if k % 2 == 0 { ("assert f(1) == 2", "pass") } else { ("assert f(1) == 0", "fail") };
        let job = ExecutionJob {
            id: serde_json::json!(format!("job-{}", 199 - k)),
            function_source: "def f(x):\n    return x * 2".into(),
            test_source: test.into(),
            timeout_ms: 1000,
            memory_limit_mb: 64,
        };
        input.push_str(&serde_json::to_string(&job).unwrap());
        input.push('\n');
        want.push((format!("job-{}", 199 - k), status));
    }
    let out = run(&input);
    let got: Vec<(String, String)> = out
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (v["id"].as_str().unwrap().to_string(), v["status"].as_str().unwrap().to_string())
        })
        .collect();
    let want: Vec<(String, String)> = want.into_iter().map(|(a, b)| (a, b.to_string())).collect();
    assert_eq!(got, want);
}
