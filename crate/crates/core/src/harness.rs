//! Test validation and semantic classification through a sandbox.

use std::collections::BTreeSet;
use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::sync::mpsc;
use std::sync::Mutex;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cpat::Cpat;
use crate::interp::{self, Limits, Outcome, ALLOWED_MODULES};
use crate::synthesis::{correspond, Correspondence};
use crate::syntax::{self, names, ExprKind, Stmt};

pub const DEFAULT_TIMEOUT_MS: u64 = 5_000;
pub const DEFAULT_MEMORY_MB: u64 = 256;

fn default_timeout() -> u64 {
    DEFAULT_TIMEOUT_MS
}

fn default_memory() -> u64 {
    DEFAULT_MEMORY_MB
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExecutionJob {
    pub id: serde_json::Value,
    pub function_source: String,
    pub test_source: String,
    #[serde(default = "default_timeout")]
    pub timeout_ms: u64,
    #[serde(default = "default_memory")]
    pub memory_limit_mb: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Error,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: serde_json::Value,
    pub status: VerdictStatus,
    pub detail: String,
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("sandbox unavailable: {0}")]
    SandboxUnavailable(String),
    #[error("no valid tests for CPAT {0}")]
    InsufficientTests(String),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WrapError {
    #[error("fragment does not parse: {0}")]
    Parse(String),
    #[error("cannot map variables: {0}")]
    Correspondence(String),
    #[error("output variable {0} is never assigned in the fragment")]
    OutputNotAssigned(String),
}

pub trait Sandbox: Send + Sync {
    fn run(&self, job: &ExecutionJob) -> Result<Verdict, HarnessError>;
}

/// Runs jobs on the built-in evaluator. Timeouts are measured in evaluation
/// steps, so verdicts are identical on every machine.
#[derive(Clone, Copy, Debug, Default)]
pub struct InProcessSandbox;

pub fn run_job(job: &ExecutionJob) -> Verdict {
    let limits = Limits::from_job(job.timeout_ms, job.memory_limit_mb);
    let (status, detail) = match interp::run_test(&job.function_source, &job.test_source, limits) {
        Outcome::Pass => (VerdictStatus::Pass, String::new()),
        Outcome::Fail(d) => (VerdictStatus::Fail, d),
        Outcome::Error(d) => (VerdictStatus::Error, d),
        Outcome::Timeout => (VerdictStatus::Timeout, format!("exceeded {} ms", job.timeout_ms)),
    };
    Verdict {
        id: job.id.clone(),
        status,
        detail,
    }
}

impl Sandbox for InProcessSandbox {
    fn run(&self, job: &ExecutionJob) -> Result<Verdict, HarnessError> {
        Ok(run_job(job))
    }
}

/// Answers newline-delimited JSON jobs until EOF. Malformed lines get an
/// error verdict; the loop never stops early.
pub fn serve<R: BufRead, W: Write>(input: R, mut output: W, sandbox: &dyn Sandbox) -> std::io::Result<usize> {
    let mut n = 0;
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let verdict = match serde_json::from_str::<ExecutionJob>(&line) {
            Ok(job) => sandbox.run(&job).unwrap_or_else(|e| Verdict {
                id: job.id.clone(),
                status: VerdictStatus::Error,
                detail: e.to_string(),
            }),
            Err(e) => Verdict {
                id: serde_json::from_str::<serde_json::Value>(&line)
                    .ok()
                    .and_then(|v| v.get("id").cloned())
                    .unwrap_or(serde_json::Value::Null),
                status: VerdictStatus::Error,
                detail: format!("protocol error: {}", e),
            },
        };
        serde_json::to_writer(&mut output, &verdict)?;
        output.write_all(b"\n")?;
        output.flush()?;
        n += 1;
    }
    Ok(n)
}

struct Worker {
    child: Child,
    stdin: ChildStdin,
    lines: mpsc::Receiver<std::io::Result<String>>,
}

/// Sends jobs to runner subprocesses speaking the NDJSON protocol. A runner
/// that misses the deadline is killed and replaced.
pub struct ProcessSandbox {
    command: Vec<String>,
    idle: Mutex<Vec<Worker>>,
    /// Extra wall-clock allowance on top of each job's timeout.
    pub grace: Duration,
}

impl ProcessSandbox {
    pub fn new(command: Vec<String>) -> Result<ProcessSandbox, HarnessError> {
        if command.is_empty() {
            return Err(HarnessError::SandboxUnavailable("empty runner command".into()));
        }
        let sb = ProcessSandbox {
            command,
            idle: Mutex::new(Vec::new()),
            grace: Duration::from_millis(2_000),
        };
        let w = sb.spawn()?;
        sb.idle.lock().unwrap().push(w);
        Ok(sb)
    }

    fn spawn(&self) -> Result<Worker, HarnessError> {
        let mut child = Command::new(&self.command[0])
            .args(&self.command[1..])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| HarnessError::SandboxUnavailable(format!("{}: {}", self.command[0], e)))?;
        let stdin = child.stdin.take().expect("piped stdin");
        let stdout: ChildStdout = child.stdout.take().expect("piped stdout");
        let (tx, rx) = mpsc::channel();
        std::thread::spawn(move || {
            for line in BufReader::new(stdout).lines() {
                if tx.send(line).is_err() {
                    break;
                }
            }
        });
        Ok(Worker {
            child,
            stdin,
            lines: rx,
        })
    }
}

impl Sandbox for ProcessSandbox {
    fn run(&self, job: &ExecutionJob) -> Result<Verdict, HarnessError> {
        let popped = self.idle.lock().unwrap().pop();
        let mut w = match popped {
            Some(w) => w,
            None => self.spawn()?,
        };
        let line = serde_json::to_string(job).expect("job serializes");
        let sent = writeln!(w.stdin, "{}", line).and_then(|_| w.stdin.flush());
        if let Err(e) = sent {
            let _ = w.child.kill();
            return Err(HarnessError::SandboxUnavailable(e.to_string()));
        }
        let deadline = Duration::from_millis(job.timeout_ms) + self.grace;
        match w.lines.recv_timeout(deadline) {
            Ok(Ok(reply)) => {
                let v: Verdict = serde_json::from_str(&reply).map_err(|e| {
                    HarnessError::SandboxUnavailable(format!("bad runner reply: {}", e))
                })?;
                self.idle.lock().unwrap().push(w);
                Ok(v)
            }
            Err(mpsc::RecvTimeoutError::Timeout) => {
                let _ = w.child.kill();
                let _ = w.child.wait();
                Ok(Verdict {
                    id: job.id.clone(),
                    status: VerdictStatus::Timeout,
                    detail: format!("no reply within {} ms", deadline.as_millis()),
                })
            }
            _ => {
                let _ = w.child.kill();
                let _ = w.child.wait();
                Err(HarnessError::SandboxUnavailable("runner exited".into()))
            }
        }
    }
}

impl Drop for ProcessSandbox {
    fn drop(&mut self) {
        for mut w in self.idle.lock().unwrap().drain(..) {
            let _ = w.child.kill();
            let _ = w.child.wait();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TestStatus {
    RawT,
    TSyntaxFail,
    TOriginalFail,
    TUninitVar,
    Valid,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestCase {
    pub id: String,
    pub code: String,
    pub cpat_id: String,
    pub status: TestStatus,
    pub temperature: f64,
    pub iteration: u32,
}

/// The callable name tests use. `f` unless the CPAT itself uses that name.
pub fn wrapper_name(cpat: &Cpat) -> &'static str {
    let taken = |n: &str| {
        cpat.input_vars.iter().any(|v| v.name == n)
            || cpat.output_vars.iter().any(|o| o == n)
            || cpat
                .lhs_ast()
                .map(|a| names::analyze(&a.body).all.iter().any(|x| x == n))
                .unwrap_or(false)
    };
    if taken("f") {
        "wrapped"
    } else {
        "f"
    }
}

/// Wraps a fragment into a function over the CPAT's inputs that returns its outputs.
pub fn wrap_fragment(code: &str, cpat: &Cpat, imports: &BTreeSet<String>) -> Result<String, WrapError> {
    let ast = syntax::parse_fragment(code).map_err(|e| WrapError::Parse(e.to_string()))?;
    let corr = correspond(&ast, cpat).map_err(|e| WrapError::Correspondence(e.to_string()))?;
    wrap_with(&ast, cpat, &corr, imports)
}

pub fn wrap_with(
    ast: &syntax::Ast,
    cpat: &Cpat,
    corr: &Correspondence,
    imports: &BTreeSet<String>,
) -> Result<String, WrapError> {
    let lookup = |n: &str| corr.map.get(n).cloned().unwrap_or_else(|| n.to_string());
    let info = names::analyze(&ast.body);
    let mut outs = Vec::new();
    for o in &cpat.output_vars {
        let v = lookup(o);
        if !info.bound.contains(&v) && !info.mutated.contains(&v) {
            return Err(WrapError::OutputNotAssigned(v));
        }
        outs.push(v);
    }
    let params: Vec<String> = cpat.input_vars.iter().map(|v| lookup(&v.name)).collect();
    let mut src = String::new();
    let mods: BTreeSet<&String> = cpat.imports.iter().chain(imports).collect();
    for m in mods {
        if ALLOWED_MODULES.contains(&m.as_str()) {
            src.push_str(&format!("import {}\n", m));
        }
    }
    src.push_str(&format!("def {}({}):\n", wrapper_name(cpat), params.join(", ")));
    for line in syntax::print_canonical(ast).lines() {
        src.push_str("    ");
        src.push_str(line);
        src.push('\n');
    }
    src.push_str(&format!("    return {}", outs.join(", ")));
    Ok(src)
}

/// Allowlisted modules the fragment uses as free attribute bases.
pub fn referenced_modules(ast: &syntax::Ast) -> BTreeSet<String> {
    let free = names::analyze(&ast.body).free;
    let mut out = BTreeSet::new();
    ast.walk_exprs(&mut |e| {
        if let ExprKind::Attribute { value, .. } = &e.kind {
            if let Some(n) = value.as_name() {
                if ALLOWED_MODULES.contains(&n) && free.iter().any(|f| f == n) {
                    out.insert(n.to_string());
                }
            }
        }
    });
    out
}

fn calls_name(s: &Stmt, name: &str) -> bool {
    let mut found = false;
    s.walk_exprs(&mut |e| {
        if let ExprKind::Call { func, .. } = &e.kind {
            if func.as_name() == Some(name) {
                found = true;
            }
        }
    });
    found
}

/// Step (iii): every input is assigned before the first call of the wrapper.
pub fn initializes_inputs(test: &syntax::Ast, cpat: &Cpat) -> bool {
    let name = wrapper_name(cpat);
    let first = test
        .body
        .iter()
        .position(|s| calls_name(s, name))
        .unwrap_or(test.body.len());
    let bound = names::analyze(&test.body[..first]).bound;
    cpat.input_vars.iter().all(|v| bound.contains(&v.name))
}

pub struct Harness<'a> {
    pub sandbox: &'a dyn Sandbox,
    pub timeout_ms: u64,
    pub memory_limit_mb: u64,
}

impl<'a> Harness<'a> {
    pub fn new(sandbox: &'a dyn Sandbox) -> Harness<'a> {
        Harness {
            sandbox,
            timeout_ms: DEFAULT_TIMEOUT_MS,
            memory_limit_mb: DEFAULT_MEMORY_MB,
        }
    }

    pub fn run_one(&self, id: &str, function_source: &str, test_source: &str) -> Result<Verdict, HarnessError> {
        self.sandbox.run(&self.job(id, function_source, test_source))
    }

    fn job(&self, id: &str, function_source: &str, test_source: &str) -> ExecutionJob {
        ExecutionJob {
            id: serde_json::Value::String(id.to_string()),
            function_source: function_source.to_string(),
            test_source: test_source.to_string(),
            timeout_ms: self.timeout_ms,
            memory_limit_mb: self.memory_limit_mb,
        }
    }

    /// Three-step test validation against the original LHS.
    pub fn validate_tests(&self, raw: Vec<TestCase>, cpat: &Cpat) -> Result<Vec<TestCase>, HarnessError> {
        let original = wrap_fragment(&cpat.lhs, cpat, &BTreeSet::new())
            .map_err(|e| HarnessError::SandboxUnavailable(format!("cannot wrap CPAT {}: {}", cpat.id, e)))?;
        raw.into_par_iter()
            .map(|mut t| {
                let Ok(ast) = syntax::parse_fragment(&t.code) else {
                    t.status = TestStatus::TSyntaxFail;
                    return Ok(t);
                };
                let v = self.sandbox.run(&self.job(&t.id, &original, &t.code))?;
                t.status = if v.status != VerdictStatus::Pass {
                    TestStatus::TOriginalFail
                } else if !initializes_inputs(&ast, cpat) {
                    TestStatus::TUninitVar
                } else {
                    TestStatus::Valid
                };
                Ok(t)
            })
            .collect()
    }

    /// True iff every valid test passes on the wrapped variant.
    pub fn classify_semantic(
        &self,
        variant_id: &str,
        function_source: &str,
        tests: &[TestCase],
    ) -> Result<bool, HarnessError> {
        let valid: Vec<&TestCase> = tests.iter().filter(|t| t.status == TestStatus::Valid).collect();
        if valid.is_empty() {
            return Err(HarnessError::InsufficientTests(
                tests.first().map(|t| t.cpat_id.clone()).unwrap_or_default(),
            ));
        }
        for t in valid {
            let id = format!("{}/{}", variant_id, t.id);
            if self.sandbox.run(&self.job(&id, function_source, &t.code))?.status != VerdictStatus::Pass {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpat1() -> Cpat {
        Cpat::from_json(
            r#"{"id": "cpat-1", "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
            "rhs": "result = numpy.sum(elements)",
            "input_vars": [{"name": "elements", "type": "List[int]"}], "output_vars": ["result"],
            "imports": ["numpy"]}"#,
            "t",
        )
        .unwrap()
    }

    fn test(id: &str, code: &str) -> TestCase {
        TestCase {
            id: id.into(),
            code: code.into(),
            cpat_id: "cpat-1".into(),
            status: TestStatus::RawT,
            temperature: 1.2,
            iteration: 1,
        }
    }

    #[test]
    fn wraps_indexed_loop_by_correspondence() {
        let c = cpat1();
        let src = wrap_fragment("loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]", &c, &BTreeSet::new()).unwrap();
        assert!(src.contains("def f(losses):"), "{}", src);
        assert!(src.ends_with("    return loss"));
        assert_eq!(
            wrap_fragment("x = 0", &c, &BTreeSet::new()).unwrap_err(),
            WrapError::Correspondence("cannot pair 1 unmatched inputs with 0 candidate variables".into())
        );
    }

    #[test]
    fn three_step_validation() {
        let c = cpat1();
        let h = Harness::new(&InProcessSandbox);
        let out = h
            .validate_tests(
                vec![
                    test("a", "elements = [1, 2, 3]\nassert f(elements) == 6"),
                    test("b", "elements = [1, 2, 3]\nassert f(elements) == 7"),
                    test("c", "assert f([1, 2, 3]) == 6"),
                    test("d", "elements = [1, 2\nassert f(elements) == 6"),
                    test("e", "elements = [2, 3, 4]\nassert f(elements) == 9"),
                ],
                &c,
            )
            .unwrap();
        let st: Vec<TestStatus> = out.iter().map(|t| t.status).collect();
        assert_eq!(
            st,
            [TestStatus::Valid, TestStatus::TOriginalFail, TestStatus::TUninitVar, TestStatus::TSyntaxFail, TestStatus::Valid]
        );
        let good = wrap_fragment("loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]", &c, &BTreeSet::new()).unwrap();
        assert!(h.classify_semantic("v", &good, &out).unwrap());
        // the product of [1, 2, 3] equals its sum; only test "e" tells them apart
        let bad = wrap_fragment("loss = 1\nfor x in losses:\n    loss *= x", &c, &BTreeSet::new()).unwrap();
        assert!(!h.classify_semantic("v", &bad, &out).unwrap());
        assert!(matches!(
            h.classify_semantic("v", &good, &out[1..4]),
            Err(HarnessError::InsufficientTests(_))
        ));
    }

    #[test]
    fn serve_protocol() {
        let input = "{\"id\": 1, \"function_source\": \"def f(x):\\n    return x\", \"test_source\": \"assert f(1) == 1\"}\nnot json\n";
        let mut out = Vec::new();
        assert_eq!(serve(input.as_bytes(), &mut out, &InProcessSandbox).unwrap(), 2);
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], r#"{"id":1,"status":"pass","detail":""}"#);
        assert!(lines[1].starts_with(r#"{"id":null,"status":"error","detail":"protocol error"#));
    }
}
