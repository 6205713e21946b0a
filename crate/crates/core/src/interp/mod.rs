//! A small tree-walking evaluator for the supported Python subset.
//!
//! It stands in for a real interpreter when validating tests and variants:
//! deterministic, no I/O, and bounded by a step budget instead of wall time.

mod builtins;
mod value;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::syntax::{
    self, Ast, BinOpKind, BoolOpKind, CmpOp, CompKind, Expr, ExprKind, Literal, Param, Stmt,
    StmtKind, UnaryOpKind,
};

pub use value::{Dict, Key, Value};

/// Modules a job may import.
pub const ALLOWED_MODULES: &[&str] = &[
    "numpy",
    "collections",
    "math",
    "functools",
    "itertools",
    "operator",
];

/// A raised Python exception, or the budget running out.
#[derive(Clone, Debug, PartialEq)]
pub struct Exc {
    pub kind: String,
    pub msg: String,
}

const TIMEOUT: &str = "<timeout>";
const MEMORY: &str = "MemoryError";

impl Exc {
    pub fn new(kind: &str, msg: impl Into<String>) -> Exc {
        Exc {
            kind: kind.to_string(),
            msg: msg.into(),
        }
    }

    fn timeout() -> Exc {
        Exc::new(TIMEOUT, "step budget exhausted")
    }

    pub fn is_timeout(&self) -> bool {
        self.kind == TIMEOUT
    }

    pub fn is_assertion(&self) -> bool {
        self.kind == "AssertionError"
    }
}

impl std::fmt::Display for Exc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.msg.is_empty() {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}: {}", self.kind, self.msg)
        }
    }
}

#[derive(Debug)]
pub enum Body {
    Block(Vec<Stmt>),
    Expr(Expr),
}

#[derive(Debug)]
pub struct Function {
    pub name: String,
    params: Vec<Param>,
    defaults: Vec<Option<Value>>,
    body: Body,
    closure: Rc<Scope>,
}

#[derive(Debug, Default)]
pub struct Scope {
    vars: RefCell<HashMap<String, Value>>,
    parent: Option<Rc<Scope>>,
}

impl Scope {
    fn child(parent: &Rc<Scope>) -> Rc<Scope> {
        Rc::new(Scope {
            vars: RefCell::new(HashMap::new()),
            parent: Some(parent.clone()),
        })
    }

    fn get(&self, n: &str) -> Option<Value> {
        if let Some(v) = self.vars.borrow().get(n) {
            return Some(v.clone());
        }
        self.parent.as_ref().and_then(|p| p.get(n))
    }

    fn set(&self, n: &str, v: Value) {
        self.vars.borrow_mut().insert(n.to_string(), v);
    }
}

enum Flow {
    Normal,
    Break,
    Continue,
    Return(Value),
}

/// Resource limits for one evaluation.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub steps: u64,
    pub cells: u64,
}

impl Limits {
    /// Budget derived from a job's wall-clock and memory limits.
    pub fn from_job(timeout_ms: u64, memory_limit_mb: u64) -> Limits {
        Limits {
            steps: timeout_ms.saturating_mul(STEPS_PER_MS),
            cells: memory_limit_mb.saturating_mul(CELLS_PER_MB),
        }
    }
}

/// Steps the evaluator grants per millisecond of job timeout.
pub const STEPS_PER_MS: u64 = 2_000;
/// Container slots granted per megabyte of job memory.
pub const CELLS_PER_MB: u64 = 16_384;

pub struct Interp {
    steps: u64,
    cells: u64,
    limits: Limits,
    depth: usize,
    pub globals: Rc<Scope>,
}

type R<T> = Result<T, Exc>;

impl Interp {
    pub fn new(limits: Limits) -> Interp {
        Interp {
            steps: 0,
            cells: 0,
            limits,
            depth: 0,
            globals: Rc::new(Scope::default()),
        }
    }

    fn tick(&mut self, n: u64) -> R<()> {
        self.steps += n;
        if self.steps > self.limits.steps {
            Err(Exc::timeout())
        } else {
            Ok(())
        }
    }

    fn alloc(&mut self, n: usize) -> R<()> {
        self.cells += n as u64;
        self.tick(1)?;
        if self.cells > self.limits.cells {
            Err(Exc::new(MEMORY, "memory limit exceeded"))
        } else {
            Ok(())
        }
    }

    /// Runs a module-level fragment in the global scope.
    pub fn run(&mut self, ast: &Ast) -> R<()> {
        let g = self.globals.clone();
        match self.exec_block(&ast.body, &g)? {
            Flow::Normal => Ok(()),
            Flow::Return(_) => Err(Exc::new("SyntaxError", "'return' outside function")),
            _ => Err(Exc::new("SyntaxError", "'break' outside loop")),
        }
    }

    pub fn run_source(&mut self, src: &str) -> R<()> {
        if src.trim().is_empty() {
            return Ok(());
        }
        let ast = syntax::parse_fragment(src).map_err(|e| Exc::new("SyntaxError", e.to_string()))?;
        self.run(&ast)
    }

    fn exec_block(&mut self, stmts: &[Stmt], sc: &Rc<Scope>) -> R<Flow> {
        for s in stmts {
            match self.exec(s, sc)? {
                Flow::Normal => {}
                other => return Ok(other),
            }
        }
        Ok(Flow::Normal)
    }

    fn exec(&mut self, s: &Stmt, sc: &Rc<Scope>) -> R<Flow> {
        self.tick(1)?;
        match &s.kind {
            StmtKind::Assign { targets, value } => {
                let v = self.eval(value, sc)?;
                for t in targets {
                    self.assign(t, v.clone(), sc)?;
                }
            }
            StmtKind::AugAssign { target, op, value } => {
                let cur = self.eval(target, sc)?;
                let rhs = self.eval(value, sc)?;
                // list += iterable extends in place
                let new = match (&cur, op) {
                    (Value::List(l), BinOpKind::Add) => {
                        let items = self.iterate(&rhs)?;
                        self.alloc(items.len())?;
                        l.borrow_mut().extend(items);
                        cur.clone()
                    }
                    _ => self.binop(*op, &cur, &rhs)?,
                };
                self.assign(target, new, sc)?;
            }
            StmtKind::For { target, iter, body } => {
                let it = self.eval(iter, sc)?;
                for v in self.iterate(&it)? {
                    self.assign(target, v, sc)?;
                    match self.exec_block(body, sc)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        _ => {}
                    }
                }
            }
            StmtKind::While { test, body } => {
                while self.eval(test, sc)?.truthy() {
                    match self.exec_block(body, sc)? {
                        Flow::Break => break,
                        Flow::Return(v) => return Ok(Flow::Return(v)),
                        _ => {}
                    }
                }
            }
            StmtKind::If { test, body, orelse } => {
                let branch = if self.eval(test, sc)?.truthy() { body } else { orelse };
                return self.exec_block(branch, sc);
            }
            StmtKind::With { .. } => {
                return Err(Exc::new("TypeError", "context managers are not available"));
            }
            StmtKind::Expr(e) => {
                self.eval(e, sc)?;
            }
            StmtKind::FunctionDef { name, params, body } => {
                let f = self.make_function(name, params, Body::Block(body.clone()), sc)?;
                sc.set(name, f);
            }
            StmtKind::ClassDef { .. } => {
                return Err(Exc::new("TypeError", "class definitions are not available"));
            }
            StmtKind::Return(v) => {
                let v = match v {
                    Some(e) => self.eval(e, sc)?,
                    None => Value::None,
                };
                return Ok(Flow::Return(v));
            }
            StmtKind::Import(names) => {
                for a in names {
                    let root = a.name.split('.').next().unwrap_or("");
                    let m = module(&a.name)?;
                    match &a.asname {
                        Some(n) => sc.set(n, m),
                        None => sc.set(root, module(root)?),
                    }
                }
            }
            StmtKind::ImportFrom { module: m, level, names } => {
                if *level > 0 {
                    return Err(Exc::new("ImportError", "relative import"));
                }
                let Value::Module(mname) = module(m)? else {
                    unreachable!()
                };
                for a in names {
                    let v = builtins::module_attr(mname, &a.name)?;
                    sc.set(a.asname.as_ref().unwrap_or(&a.name), v);
                }
            }
            StmtKind::Assert { test, msg } => {
                if !self.eval(test, sc)?.truthy() {
                    let m = match msg {
                        Some(m) => self.eval(m, sc)?.to_str(),
                        None => String::new(),
                    };
                    return Err(Exc::new("AssertionError", m));
                }
            }
            StmtKind::Pass => {}
            StmtKind::Break => return Ok(Flow::Break),
            StmtKind::Continue => return Ok(Flow::Continue),
            StmtKind::Meta(m) => return Err(Exc::new("SyntaxError", format!("template variable {}", m))),
        }
        Ok(Flow::Normal)
    }

    fn make_function(&mut self, name: &str, params: &[Param], body: Body, sc: &Rc<Scope>) -> R<Value> {
        let mut defaults = Vec::new();
        for p in params {
            defaults.push(match &p.default {
                Some(d) => Some(self.eval(d, sc)?),
                None => None,
            });
        }
        Ok(Value::Func(Rc::new(Function {
            name: name.to_string(),
            params: params.to_vec(),
            defaults,
            body,
            closure: sc.clone(),
        })))
    }

    fn assign(&mut self, t: &Expr, v: Value, sc: &Rc<Scope>) -> R<()> {
        match &t.kind {
            ExprKind::Name(n) => {
                sc.set(n, v);
                Ok(())
            }
            ExprKind::Tuple(items) | ExprKind::List(items) => {
                let vals = self.iterate(&v)?;
                if vals.len() != items.len() {
                    return Err(Exc::new(
                        "ValueError",
                        format!("expected {} values to unpack, got {}", items.len(), vals.len()),
                    ));
                }
                for (t, v) in items.iter().zip(vals) {
                    self.assign(t, v, sc)?;
                }
                Ok(())
            }
            ExprKind::Subscript { value, index } => {
                let c = self.eval(value, sc)?;
                let i = self.eval(index, sc)?;
                self.setitem(&c, &i, v)
            }
            _ => Err(Exc::new("SyntaxError", "cannot assign to expression")),
        }
    }

    fn setitem(&mut self, c: &Value, i: &Value, v: Value) -> R<()> {
        match c {
            Value::List(l) => {
                let mut l = l.borrow_mut();
                let idx = index_of(i, l.len())?;
                l[idx] = v;
                Ok(())
            }
            Value::Dict(d) => {
                let k = i.key()?;
                self.alloc(1)?;
                d.borrow_mut().items.insert(k, (i.clone(), v));
                Ok(())
            }
            other => Err(Exc::new(
                "TypeError",
                format!("'{}' object does not support item assignment", other.type_name()),
            )),
        }
    }

    fn getitem(&mut self, c: &Value, i: &Value) -> R<Value> {
        if let ExprOrSlice::Slice(lo, hi, st) = slice_parts(i) {
            return self.slice(c, lo, hi, st);
        }
        match c {
            Value::List(l) => {
                let l = l.borrow();
                Ok(l[index_of(i, l.len())?].clone())
            }
            Value::Tuple(t) => Ok(t[index_of(i, t.len())?].clone()),
            Value::Str(s) => {
                let chars: Vec<char> = s.chars().collect();
                Ok(Value::str(&chars[index_of(i, chars.len())?].to_string()))
            }
            Value::Dict(d) => {
                let k = i.key()?;
                if let Some((_, v)) = d.borrow().items.get(&k) {
                    return Ok(v.clone());
                }
                let (factory, counter) = {
                    let d = d.borrow();
                    (d.default_factory.clone(), d.counter)
                };
                if counter {
                    return Ok(Value::Int(0));
                }
                match factory {
                    Some(f) => {
                        let v = self.call(&f, Vec::new(), Vec::new())?;
                        self.alloc(1)?;
                        d.borrow_mut().items.insert(k, (i.clone(), v.clone()));
                        Ok(v)
                    }
                    None => Err(Exc::new("KeyError", i.repr())),
                }
            }
            other => Err(Exc::new(
                "TypeError",
                format!("'{}' object is not subscriptable", other.type_name()),
            )),
        }
    }

    fn slice(&mut self, c: &Value, lo: Option<Value>, hi: Option<Value>, st: Option<Value>) -> R<Value> {
        let items: Vec<Value> = match c {
            Value::List(l) => l.borrow().clone(),
            Value::Tuple(t) => t.to_vec(),
            Value::Str(s) => s.chars().map(|ch| Value::str(&ch.to_string())).collect(),
            other => {
                return Err(Exc::new(
                    "TypeError",
                    format!("'{}' object is not subscriptable", other.type_name()),
                ))
            }
        };
        let n = items.len() as i64;
        let step = match st {
            None | Some(Value::None) => 1,
            Some(v) => int_arg(&v)?,
        };
        if step == 0 {
            return Err(Exc::new("ValueError", "slice step cannot be zero"));
        }
        let clamp = |v: Option<Value>, dflt: i64| -> R<i64> {
            match v {
                None | Some(Value::None) => Ok(dflt),
                Some(v) => {
                    let mut i = int_arg(&v)?;
                    if i < 0 {
                        i += n;
                    }
                    Ok(if step > 0 { i.clamp(0, n) } else { i.clamp(-1, n - 1) })
                }
            }
        };
        let (start, stop) = if step > 0 {
            (clamp(lo, 0)?, clamp(hi, n)?)
        } else {
            (clamp(lo, n - 1)?, clamp(hi, -1)?)
        };
        let mut out = Vec::new();
        let mut i = start;
        while (step > 0 && i < stop) || (step < 0 && i > stop) {
            out.push(items[i as usize].clone());
            i += step;
        }
        self.alloc(out.len())?;
        Ok(match c {
            Value::List(_) => Value::list(out),
            Value::Tuple(_) => Value::tuple(out),
            _ => Value::str(&out.iter().map(|v| v.to_str()).collect::<String>()),
        })
    }

    /// Materializes an iterable, charging one step per element.
    pub fn iterate(&mut self, v: &Value) -> R<Vec<Value>> {
        let out: Vec<Value> = match v {
            Value::List(l) => l.borrow().clone(),
            Value::Tuple(t) => t.to_vec(),
            Value::Str(s) => s.chars().map(|c| Value::str(&c.to_string())).collect(),
            Value::Dict(d) => d.borrow().items.values().map(|(k, _)| k.clone()).collect(),
            Value::Set(s) => s.borrow().values().cloned().collect(),
            other => {
                return Err(Exc::new(
                    "TypeError",
                    format!("'{}' object is not iterable", other.type_name()),
                ))
            }
        };
        self.tick(out.len() as u64)?;
        Ok(out)
    }

    pub fn call(&mut self, f: &Value, args: Vec<Value>, kwargs: Vec<(String, Value)>) -> R<Value> {
        self.tick(1)?;
        match f {
            Value::Func(func) => self.call_function(func, args, kwargs),
            Value::Builtin(name) => builtins::call(self, name, args, kwargs),
            Value::Method(recv, name) => builtins::call_method(self, recv, name, args, kwargs),
            other => Err(Exc::new(
                "TypeError",
                format!("'{}' object is not callable", other.type_name()),
            )),
        }
    }

    fn call_function(&mut self, f: &Rc<Function>, args: Vec<Value>, kwargs: Vec<(String, Value)>) -> R<Value> {
        if self.depth > 200 {
            return Err(Exc::new("RecursionError", "maximum recursion depth exceeded"));
        }
        if args.len() > f.params.len() {
            return Err(Exc::new(
                "TypeError",
                format!("{}() takes {} positional arguments but {} were given", f.name, f.params.len(), args.len()),
            ));
        }
        let sc = Scope::child(&f.closure);
        let mut filled = vec![false; f.params.len()];
        for (i, a) in args.into_iter().enumerate() {
            sc.set(&f.params[i].name, a);
            filled[i] = true;
        }
        for (k, v) in kwargs {
            let Some(i) = f.params.iter().position(|p| p.name == k) else {
                return Err(Exc::new("TypeError", format!("{}() got an unexpected keyword argument '{}'", f.name, k)));
            };
            if filled[i] {
                return Err(Exc::new("TypeError", format!("{}() got multiple values for argument '{}'", f.name, k)));
            }
            sc.set(&k, v);
            filled[i] = true;
        }
        for (i, p) in f.params.iter().enumerate() {
            if !filled[i] {
                match &f.defaults[i] {
                    Some(d) => sc.set(&p.name, d.clone()),
                    None => {
                        return Err(Exc::new(
                            "TypeError",
                            format!("{}() missing required positional argument: '{}'", f.name, p.name),
                        ))
                    }
                }
            }
        }
        self.depth += 1;
        let out = match &f.body {
            Body::Expr(e) => self.eval(e, &sc),
            Body::Block(b) => self.exec_block(b, &sc).map(|fl| match fl {
                Flow::Return(v) => v,
                _ => Value::None,
            }),
        };
        self.depth -= 1;
        out
    }

    pub fn eval(&mut self, e: &Expr, sc: &Rc<Scope>) -> R<Value> {
        self.tick(1)?;
        match &e.kind {
            ExprKind::Name(n) => sc
                .get(n)
                .or_else(|| builtins::builtin(n))
                .ok_or_else(|| Exc::new("NameError", format!("name '{}' is not defined", n))),
            ExprKind::Literal(l) => Ok(match l {
                Literal::Int(i) => Value::Int(*i),
                Literal::Float(f) => Value::Float(*f),
                Literal::Str(s) => Value::str(s),
                Literal::Bool(b) => Value::Bool(*b),
                Literal::None => Value::None,
            }),
            ExprKind::Attribute { value, attr } => {
                let v = self.eval(value, sc)?;
                match &v {
                    Value::Module(m) => builtins::module_attr(m, attr),
                    _ if builtins::has_method(&v, attr) => Ok(Value::Method(Box::new(v), attr.as_str().into())),
                    _ => Err(Exc::new(
                        "AttributeError",
                        format!("'{}' object has no attribute '{}'", v.type_name(), attr),
                    )),
                }
            }
            ExprKind::Subscript { value, index } => {
                let c = self.eval(value, sc)?;
                let i = self.eval(index, sc)?;
                self.getitem(&c, &i)
            }
            ExprKind::Slice { lower, upper, step } => {
                let mut part = |p: &Option<Box<Expr>>| -> R<Value> {
                    match p {
                        Some(e) => self.eval(e, sc),
                        None => Ok(Value::None),
                    }
                };
                let (l, u, s) = (part(lower)?, part(upper)?, part(step)?);
                // slices travel as a tagged tuple; only getitem consumes them
                Ok(Value::tuple(vec![Value::Builtin(SLICE_TAG), l, u, s]))
            }
            ExprKind::Call { func, args, keywords } => {
                let f = self.eval(func, sc)?;
                let mut a = Vec::with_capacity(args.len());
                for x in args {
                    a.push(self.eval(x, sc)?);
                }
                let mut kw = Vec::new();
                for k in keywords {
                    kw.push((k.name.clone(), self.eval(&k.value, sc)?));
                }
                self.call(&f, a, kw)
            }
            ExprKind::BinOp { left, op, right } => {
                let l = self.eval(left, sc)?;
                let r = self.eval(right, sc)?;
                self.binop(*op, &l, &r)
            }
            ExprKind::UnaryOp { op, operand } => {
                let v = self.eval(operand, sc)?;
                match (op, &v) {
                    (UnaryOpKind::Not, _) => Ok(Value::Bool(!v.truthy())),
                    (UnaryOpKind::Neg, Value::Int(i)) => Ok(Value::Int(i.checked_neg().ok_or_else(overflow)?)),
                    (UnaryOpKind::Neg, Value::Bool(b)) => Ok(Value::Int(-(*b as i64))),
                    (UnaryOpKind::Neg, Value::Float(f)) => Ok(Value::Float(-f)),
                    (UnaryOpKind::Pos, Value::Int(_) | Value::Float(_)) => Ok(v.clone()),
                    (UnaryOpKind::Invert, Value::Int(i)) => Ok(Value::Int(!i)),
                    _ => Err(Exc::new("TypeError", format!("bad operand type for unary op: '{}'", v.type_name()))),
                }
            }
            ExprKind::BoolOp { op, values } => {
                let mut last = Value::None;
                for (i, x) in values.iter().enumerate() {
                    last = self.eval(x, sc)?;
                    let stop = match op {
                        BoolOpKind::And => !last.truthy(),
                        BoolOpKind::Or => last.truthy(),
                    };
                    if stop || i + 1 == values.len() {
                        break;
                    }
                }
                Ok(last)
            }
            ExprKind::Compare { left, ops, comparators } => {
                let mut l = self.eval(left, sc)?;
                for (op, c) in ops.iter().zip(comparators) {
                    let r = self.eval(c, sc)?;
                    if !self.compare(*op, &l, &r)? {
                        return Ok(Value::Bool(false));
                    }
                    l = r;
                }
                Ok(Value::Bool(true))
            }
            ExprKind::IfExp { test, body, orelse } => {
                if self.eval(test, sc)?.truthy() {
                    self.eval(body, sc)
                } else {
                    self.eval(orelse, sc)
                }
            }
            ExprKind::Lambda { params, body } => {
                self.make_function("<lambda>", params, Body::Expr((**body).clone()), sc)
            }
            ExprKind::List(items) => {
                let v = self.eval_all(items, sc)?;
                self.alloc(v.len())?;
                Ok(Value::list(v))
            }
            ExprKind::Tuple(items) => {
                let v = self.eval_all(items, sc)?;
                Ok(Value::tuple(v))
            }
            ExprKind::Dict(pairs) => {
                let mut d = Dict::default();
                for (k, v) in pairs {
                    let k = self.eval(k, sc)?;
                    let v = self.eval(v, sc)?;
                    d.items.insert(k.key()?, (k, v));
                }
                self.alloc(d.items.len())?;
                Ok(Value::dict(d))
            }
            ExprKind::Comprehension { kind, elt, value, generators } => {
                let inner = Scope::child(sc);
                let mut out = Vec::new();
                self.comprehend(generators, 0, elt, value.as_deref(), &inner, &mut out)?;
                self.alloc(out.len())?;
                match kind {
                    CompKind::List | CompKind::Generator => Ok(Value::list(out.into_iter().map(|(k, _)| k).collect())),
                    CompKind::Set => {
                        let mut s = value::SetItems::default();
                        for (v, _) in out {
                            s.insert(v.key()?, v);
                        }
                        Ok(Value::set(s))
                    }
                    CompKind::Dict => {
                        let mut d = Dict::default();
                        for (k, v) in out {
                            d.items.insert(k.key()?, (k, v.unwrap_or(Value::None)));
                        }
                        Ok(Value::dict(d))
                    }
                }
            }
            ExprKind::Meta(m) => Err(Exc::new("SyntaxError", format!("template variable {}", m))),
        }
    }

    fn comprehend(
        &mut self,
        gens: &[syntax::CompFor],
        i: usize,
        elt: &Expr,
        value: Option<&Expr>,
        sc: &Rc<Scope>,
        out: &mut Vec<(Value, Option<Value>)>,
    ) -> R<()> {
        let Some(g) = gens.get(i) else {
            let k = self.eval(elt, sc)?;
            let v = match value {
                Some(v) => Some(self.eval(v, sc)?),
                None => None,
            };
            out.push((k, v));
            return Ok(());
        };
        let it = self.eval(&g.iter, sc)?;
        'outer: for v in self.iterate(&it)? {
            self.assign(&g.target, v, sc)?;
            for c in &g.ifs {
                if !self.eval(c, sc)?.truthy() {
                    continue 'outer;
                }
            }
            self.comprehend(gens, i + 1, elt, value, sc, out)?;
        }
        Ok(())
    }

    fn eval_all(&mut self, items: &[Expr], sc: &Rc<Scope>) -> R<Vec<Value>> {
        items.iter().map(|x| self.eval(x, sc)).collect()
    }

    pub fn contains(&mut self, c: &Value, x: &Value) -> R<bool> {
        Ok(match c {
            Value::Str(s) => match x {
                Value::Str(sub) => s.contains(&**sub),
                _ => return Err(Exc::new("TypeError", "'in <string>' requires string as left operand")),
            },
            Value::Dict(d) => d.borrow().items.contains_key(&x.key()?),
            Value::Set(s) => s.borrow().contains_key(&x.key()?),
            _ => {
                let items = self.iterate(c)?;
                items.iter().any(|v| v.py_eq(x))
            }
        })
    }

    fn compare(&mut self, op: CmpOp, l: &Value, r: &Value) -> R<bool> {
        use std::cmp::Ordering::*;
        Ok(match op {
            CmpOp::Eq => l.py_eq(r),
            CmpOp::NotEq => !l.py_eq(r),
            CmpOp::Lt => l.py_cmp(r)? == Less,
            CmpOp::LtE => l.py_cmp(r)? != Greater,
            CmpOp::Gt => l.py_cmp(r)? == Greater,
            CmpOp::GtE => l.py_cmp(r)? != Less,
            CmpOp::In => self.contains(r, l)?,
            CmpOp::NotIn => !self.contains(r, l)?,
            CmpOp::Is => l.is(r),
            CmpOp::IsNot => !l.is(r),
        })
    }

    pub fn binop(&mut self, op: BinOpKind, l: &Value, r: &Value) -> R<Value> {
        use BinOpKind::*;
        let unsupported = || {
            Exc::new(
                "TypeError",
                format!(
                    "unsupported operand type(s) for {}: '{}' and '{}'",
                    op.symbol(),
                    l.type_name(),
                    r.type_name()
                ),
            )
        };
        let ints = match (l, r) {
            (Value::Int(_) | Value::Bool(_), Value::Int(_) | Value::Bool(_)) => Some((int_arg(l)?, int_arg(r)?)),
            _ => None,
        };
        if let Some((a, b)) = ints {
            return Ok(match op {
                Add => Value::Int(a.checked_add(b).ok_or_else(overflow)?),
                Sub => Value::Int(a.checked_sub(b).ok_or_else(overflow)?),
                Mul => Value::Int(a.checked_mul(b).ok_or_else(overflow)?),
                Div => {
                    if b == 0 {
                        return Err(zero_div());
                    }
                    Value::Float(a as f64 / b as f64)
                }
                FloorDiv => {
                    if b == 0 {
                        return Err(zero_div());
                    }
                    Value::Int(a.div_euclid(b) - if b < 0 && a.rem_euclid(b) != 0 { 1 } else { 0 })
                }
                Mod => {
                    if b == 0 {
                        return Err(zero_div());
                    }
                    let m = a % b;
                    Value::Int(if m != 0 && (m < 0) != (b < 0) { m + b } else { m })
                }
                Pow => {
                    if b < 0 {
                        Value::Float((a as f64).powf(b as f64))
                    } else {
                        let e = u32::try_from(b).map_err(|_| overflow())?;
                        Value::Int(a.checked_pow(e).ok_or_else(overflow)?)
                    }
                }
                LShift => Value::Int(a.checked_shl(u32::try_from(b).map_err(|_| overflow())?).ok_or_else(overflow)?),
                RShift => Value::Int(a >> b.clamp(0, 63)),
                BitOr => Value::Int(a | b),
                BitXor => Value::Int(a ^ b),
                BitAnd => Value::Int(a & b),
                MatMul => return Err(unsupported()),
            });
        }
        if let (Some(a), Some(b)) = (num(l), num(r)) {
            return Ok(Value::Float(match op {
                Add => a + b,
                Sub => a - b,
                Mul => a * b,
                Div => {
                    if b == 0.0 {
                        return Err(zero_div());
                    }
                    a / b
                }
                FloorDiv => {
                    if b == 0.0 {
                        return Err(zero_div());
                    }
                    (a / b).floor()
                }
                Mod => {
                    if b == 0.0 {
                        return Err(zero_div());
                    }
                    a - b * (a / b).floor()
                }
                Pow => a.powf(b),
                _ => return Err(unsupported()),
            }));
        }
        match (op, l, r) {
            (Add, Value::Str(a), Value::Str(b)) => {
                self.alloc((a.len() + b.len()) / 8)?;
                Ok(Value::str(&format!("{}{}", a, b)))
            }
            (Add, Value::List(a), Value::List(b)) => {
                let mut v = a.borrow().clone();
                v.extend(b.borrow().iter().cloned());
                self.alloc(v.len())?;
                Ok(Value::list(v))
            }
            (Add, Value::Tuple(a), Value::Tuple(b)) => {
                let mut v = a.to_vec();
                v.extend(b.iter().cloned());
                Ok(Value::tuple(v))
            }
            (Mul, Value::Str(_) | Value::List(_) | Value::Tuple(_), Value::Int(_) | Value::Bool(_)) => self.repeat(l, int_arg(r)?),
            (Mul, Value::Int(_) | Value::Bool(_), Value::Str(_) | Value::List(_) | Value::Tuple(_)) => self.repeat(r, int_arg(l)?),
            (BitOr | BitAnd | Sub | BitXor, Value::Set(a), Value::Set(b)) => {
                let (a, b) = (a.borrow(), b.borrow());
                let mut out = value::SetItems::default();
                match op {
                    BitOr => {
                        out.extend(a.iter().map(|(k, v)| (k.clone(), v.clone())));
                        out.extend(b.iter().map(|(k, v)| (k.clone(), v.clone())));
                    }
                    BitAnd => out.extend(a.iter().filter(|(k, _)| b.contains_key(*k)).map(|(k, v)| (k.clone(), v.clone()))),
                    Sub => out.extend(a.iter().filter(|(k, _)| !b.contains_key(*k)).map(|(k, v)| (k.clone(), v.clone()))),
                    _ => {
                        out.extend(a.iter().filter(|(k, _)| !b.contains_key(*k)).map(|(k, v)| (k.clone(), v.clone())));
                        out.extend(b.iter().filter(|(k, _)| !a.contains_key(*k)).map(|(k, v)| (k.clone(), v.clone())));
                    }
                }
                self.alloc(out.len())?;
                Ok(Value::set(out))
            }
            (Add, Value::Dict(a), Value::Dict(b)) if a.borrow().counter => {
                let mut d = a.borrow().clone();
                for (k, (kv, v)) in b.borrow().items.iter() {
                    let cur = d.items.get(k).map(|(_, c)| c.clone()).unwrap_or(Value::Int(0));
                    let sum = self.binop(Add, &cur, v)?;
                    d.items.insert(k.clone(), (kv.clone(), sum));
                }
                Ok(Value::dict(d))
            }
            _ => Err(unsupported()),
        }
    }

    fn repeat(&mut self, v: &Value, n: i64) -> R<Value> {
        let n = n.max(0) as usize;
        match v {
            Value::Str(s) => {
                self.alloc(s.len() * n / 8)?;
                Ok(Value::str(&s.repeat(n)))
            }
            Value::List(l) => {
                let l = l.borrow();
                self.alloc(l.len() * n)?;
                Ok(Value::list(l.iter().cloned().cycle().take(l.len() * n).collect()))
            }
            Value::Tuple(t) => {
                self.alloc(t.len() * n)?;
                Ok(Value::tuple(t.iter().cloned().cycle().take(t.len() * n).collect()))
            }
            _ => unreachable!(),
        }
    }
}

pub(crate) const SLICE_TAG: &str = "<slice>";

enum ExprOrSlice {
    Index,
    Slice(Option<Value>, Option<Value>, Option<Value>),
}

fn slice_parts(v: &Value) -> ExprOrSlice {
    if let Value::Tuple(t) = v {
        if t.len() == 4 && matches!(t[0], Value::Builtin(SLICE_TAG)) {
            return ExprOrSlice::Slice(Some(t[1].clone()), Some(t[2].clone()), Some(t[3].clone()));
        }
    }
    ExprOrSlice::Index
}

fn num(v: &Value) -> Option<f64> {
    match v {
        Value::Int(i) => Some(*i as f64),
        Value::Bool(b) => Some(*b as i64 as f64),
        Value::Float(f) => Some(*f),
        _ => None,
    }
}

pub(crate) fn int_arg(v: &Value) -> R<i64> {
    match v {
        Value::Int(i) => Ok(*i),
        Value::Bool(b) => Ok(*b as i64),
        other => Err(Exc::new(
            "TypeError",
            format!("'{}' object cannot be interpreted as an integer", other.type_name()),
        )),
    }
}

fn index_of(i: &Value, len: usize) -> R<usize> {
    let mut i = int_arg(i)?;
    if i < 0 {
        i += len as i64;
    }
    if i < 0 || i as usize >= len {
        return Err(Exc::new("IndexError", "index out of range"));
    }
    Ok(i as usize)
}

fn overflow() -> Exc {
    Exc::new("OverflowError", "integer result too large")
}

fn zero_div() -> Exc {
    Exc::new("ZeroDivisionError", "division by zero")
}

fn module(name: &str) -> R<Value> {
    ALLOWED_MODULES
        .iter()
        .find(|m| **m == name)
        .map(|m| Value::Module(m))
        .ok_or_else(|| Exc::new("ImportError", format!("import of '{}' is denied", name)))
}

/// How a test run ended.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Error(String),
    Timeout,
}

/// Loads `function_source`, then runs `test_source` against it.
pub fn run_test(function_source: &str, test_source: &str, limits: Limits) -> Outcome {
    let mut it = Interp::new(limits);
    let res = it.run_source(function_source).and_then(|_| it.run_source(test_source));
    match res {
        Ok(()) => Outcome::Pass,
        Err(e) if e.is_timeout() => Outcome::Timeout,
        Err(e) if e.is_assertion() => Outcome::Fail(e.to_string()),
        Err(e) => Outcome::Error(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: Limits = Limits {
        steps: 1_000_000,
        cells: 1_000_000,
    };

    fn eval(src: &str, expr: &str) -> String {
        let mut it = Interp::new(L);
        it.run_source(src).unwrap();
        let e = syntax::parse_fragment(expr).unwrap();
        let StmtKind::Expr(e) = &e.body[0].kind else { panic!() };
        let g = it.globals.clone();
        it.eval(e, &g).unwrap().repr()
    }

    #[test]
    fn sum_loop_sums() {
        let f = "def f(elements):\n    result = 0\n    for elem in elements:\n        result = elem + result\n    return result";
        assert_eq!(run_test(f, "assert f([1, 2, 3]) == 6", L), Outcome::Pass);
        assert!(matches!(run_test(f, "assert f([1, 2, 3]) == 7", L), Outcome::Fail(_)));
        assert!(matches!(run_test(f, "assert g([1]) == 1", L), Outcome::Error(_)));
        assert_eq!(run_test("def f():\n    while True:\n        pass", "f()", L), Outcome::Timeout);
    }

    #[test]
    fn arithmetic_and_containers() {
        assert_eq!(eval("", "7 // -2"), "-4");
        assert_eq!(eval("", "-7 % 3"), "2");
        assert_eq!(eval("", "[1, 2, 3][::-1]"), "[3, 2, 1]");
        assert_eq!(eval("", "[x * x for x in range(4) if x % 2 == 0]"), "[0, 4]");
        assert_eq!(eval("d = {}\nd.setdefault(1, []).append(2)", "d"), "{1: [2]}");
        assert_eq!(eval("", "', '.join(['a', 'b'])"), "'a, b'");
        assert_eq!(eval("import collections", "collections.Counter('abca')"), "Counter({'a': 2, 'b': 1, 'c': 1})");
        assert_eq!(eval("import numpy", "numpy.cumsum([1, 2, 3])"), "[1, 3, 6]");
        assert_eq!(eval("", "sorted([3, 1, 2], reverse=True)"), "[3, 2, 1]");
        assert_eq!(eval("a = [1]\nb = a\na += [2]", "b"), "[1, 2]");
        assert_eq!(eval("", "1 == 1.0 and {1: 2} == {1.0: 2}"), "True");
    }

    #[test]
    fn denied_imports() {
        assert!(matches!(run_test("import os", "", L), Outcome::Error(_)));
        assert!(matches!(run_test("", "open('x', 'w')", L), Outcome::Error(_)));
    }
}
