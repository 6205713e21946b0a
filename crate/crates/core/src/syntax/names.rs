//! Flow-insensitive name analysis over a statement list.
//!
//! Source order stands in for execution order; that is enough for the small
//! straight-line-plus-loop fragments this crate deals with.

use super::ast::*;

const BUILTINS: &[&str] = &[
    "abs", "all", "any", "bool", "callable", "chr", "dict", "dir", "divmod", "enumerate", "filter",
    "float", "format", "frozenset", "getattr", "hasattr", "hash", "id", "int", "isinstance",
    "issubclass", "iter", "len", "list", "map", "max", "min", "next", "object", "ord", "pow",
    "print", "range", "repr", "reversed", "round", "set", "setattr", "slice", "sorted", "str",
    "sum", "super", "tuple", "type", "zip", "Exception", "ValueError", "TypeError", "KeyError",
    "IndexError", "AssertionError", "StopIteration", "NotImplemented", "self",
];

/// Standard-library modules the import policy accepts without a CPAT declaring them.
pub const STDLIB_MODULES: &[&str] = &[
    "abc", "bisect", "collections", "copy", "functools", "heapq", "itertools", "json", "math",
    "operator", "os", "random", "re", "statistics", "string", "sys", "time", "typing",
];

pub fn is_builtin(name: &str) -> bool {
    BUILTINS.contains(&name)
}

pub fn is_stdlib_module(name: &str) -> bool {
    STDLIB_MODULES.contains(&name)
}

#[derive(Default, Debug, Clone)]
pub struct NameInfo {
    /// Names read before any write in this scope, first-occurrence order.
    pub free: Vec<String>,
    /// Names written in this scope (assignment, loop, import, def, with-as), first-occurrence order.
    pub bound: Vec<String>,
    /// Loop targets, a subset of `bound`.
    pub loop_targets: Vec<String>,
    /// Roots of subscript/attribute stores and receivers of method calls.
    pub mutated: Vec<String>,
    /// Names used directly as call targets (`f(x)`).
    pub called: Vec<String>,
    /// Every Name occurrence in pre-order, duplicates dropped.
    pub all: Vec<String>,
    /// Names written by top-level statements only (not inside loops or branches).
    pub top_level_bound: Vec<String>,
}

fn push(v: &mut Vec<String>, n: &str) {
    if !v.iter().any(|x| x == n) {
        v.push(n.to_string());
    }
}

struct Walker {
    info: NameInfo,
    local: Vec<Vec<String>>,
}

impl Walker {
    fn is_local(&self, n: &str) -> bool {
        self.local.iter().any(|s| s.iter().any(|x| x == n))
    }

    fn read(&mut self, n: &str) {
        push(&mut self.info.all, n);
        if self.is_local(n) {
            return;
        }
        if !self.info.bound.iter().any(|x| x == n) {
            push(&mut self.info.free, n);
        }
    }

    fn write(&mut self, n: &str, top: bool) {
        push(&mut self.info.all, n);
        if self.is_local(n) {
            return;
        }
        push(&mut self.info.bound, n);
        if top {
            push(&mut self.info.top_level_bound, n);
        }
    }

    fn expr(&mut self, e: &Expr) {
        match &e.kind {
            ExprKind::Name(n) => self.read(n),
            ExprKind::Call { func, args, keywords } => {
                match &func.kind {
                    ExprKind::Name(n) => {
                        push(&mut self.info.called, n);
                        self.read(n);
                    }
                    ExprKind::Attribute { value, .. } => {
                        if let ExprKind::Name(n) = &value.kind {
                            if !self.is_local(n) {
                                push(&mut self.info.mutated, n);
                            }
                        }
                        self.expr(func);
                    }
                    _ => self.expr(func),
                }
                for a in args {
                    self.expr(a);
                }
                for k in keywords {
                    self.expr(&k.value);
                }
            }
            ExprKind::Comprehension { elt, value, generators, .. } => {
                let mut scope = Vec::new();
                for (n, g) in generators.iter().enumerate() {
                    // the first iterable is evaluated in the enclosing scope
                    if n == 0 {
                        self.expr(&g.iter);
                    }
                    collect_target_names(&g.target, &mut scope);
                    self.local.push(scope.clone());
                    if n > 0 {
                        self.expr(&g.iter);
                    }
                    for c in &g.ifs {
                        self.expr(c);
                    }
                    self.local.pop();
                }
                self.local.push(scope);
                self.expr(elt);
                if let Some(v) = value {
                    self.expr(v);
                }
                self.local.pop();
            }
            ExprKind::Lambda { params, body } => {
                for p in params {
                    if let Some(d) = &p.default {
                        self.expr(d);
                    }
                }
                self.local.push(params.iter().map(|p| p.name.clone()).collect());
                self.expr(body);
                self.local.pop();
            }
            _ => {
                for c in e.children() {
                    self.expr(c);
                }
            }
        }
    }

    fn target(&mut self, t: &Expr, top: bool, is_loop: bool) {
        match &t.kind {
            ExprKind::Name(n) => {
                self.write(n, top);
                if is_loop {
                    push(&mut self.info.loop_targets, n);
                }
            }
            ExprKind::Tuple(items) | ExprKind::List(items) => {
                for it in items {
                    self.target(it, top, is_loop);
                }
            }
            ExprKind::Subscript { value, index } => {
                if let Some(root) = root_name(value) {
                    push(&mut self.info.mutated, root);
                }
                self.expr(value);
                self.expr(index);
            }
            ExprKind::Attribute { value, .. } => {
                if let Some(root) = root_name(value) {
                    push(&mut self.info.mutated, root);
                }
                self.expr(value);
            }
            _ => self.expr(t),
        }
    }

    fn stmts(&mut self, stmts: &[Stmt], top: bool) {
        for s in stmts {
            self.stmt(s, top);
        }
    }

    fn stmt(&mut self, s: &Stmt, top: bool) {
        match &s.kind {
            StmtKind::Assign { targets, value } => {
                self.expr(value);
                for t in targets {
                    self.target(t, top, false);
                }
            }
            StmtKind::AugAssign { target, value, .. } => {
                if let ExprKind::Name(n) = &target.kind {
                    self.read(n);
                }
                self.expr(value);
                self.target(target, top, false);
            }
            StmtKind::For { target, iter, body } => {
                self.expr(iter);
                self.target(target, false, true);
                self.stmts(body, false);
            }
            StmtKind::While { test, body } => {
                self.expr(test);
                self.stmts(body, false);
            }
            StmtKind::If { test, body, orelse } => {
                self.expr(test);
                self.stmts(body, false);
                self.stmts(orelse, false);
            }
            StmtKind::With { items, body } => {
                for it in items {
                    self.expr(&it.context);
                    if let Some(a) = &it.alias {
                        self.target(a, top, false);
                    }
                }
                self.stmts(body, false);
            }
            StmtKind::Expr(e) => self.expr(e),
            StmtKind::FunctionDef { name, params, body } => {
                for p in params {
                    if let Some(d) = &p.default {
                        self.expr(d);
                    }
                }
                self.write(name, top);
                // a nested scope: its own writes are local, its reads of outer names count
                let mut inner = Walker {
                    info: NameInfo::default(),
                    local: vec![params.iter().map(|p| p.name.clone()).collect()],
                };
                inner.stmts(body, false);
                for n in inner.info.free {
                    self.read(&n);
                }
            }
            StmtKind::ClassDef { name, bases, body } => {
                for b in bases {
                    self.expr(b);
                }
                self.write(name, top);
                let mut inner = Walker {
                    info: NameInfo::default(),
                    local: Vec::new(),
                };
                inner.stmts(body, false);
                for n in inner.info.free {
                    self.read(&n);
                }
            }
            StmtKind::Return(v) => {
                if let Some(v) = v {
                    self.expr(v);
                }
            }
            StmtKind::Import(names) => {
                for a in names {
                    let bound = a
                        .asname
                        .clone()
                        .unwrap_or_else(|| a.name.split('.').next().unwrap().to_string());
                    self.write(&bound, top);
                }
            }
            StmtKind::ImportFrom { names, .. } => {
                for a in names {
                    self.write(a.asname.as_ref().unwrap_or(&a.name), top);
                }
            }
            StmtKind::Assert { test, msg } => {
                self.expr(test);
                if let Some(m) = msg {
                    self.expr(m);
                }
            }
            StmtKind::Pass | StmtKind::Break | StmtKind::Continue | StmtKind::Meta(_) => {}
        }
    }
}

pub fn root_name(e: &Expr) -> Option<&str> {
    match &e.kind {
        ExprKind::Name(n) => Some(n),
        ExprKind::Subscript { value, .. } | ExprKind::Attribute { value, .. } => root_name(value),
        ExprKind::Call { func, .. } => match &func.kind {
            ExprKind::Attribute { value, .. } => root_name(value),
            _ => None,
        },
        _ => None,
    }
}

fn collect_target_names(t: &Expr, out: &mut Vec<String>) {
    match &t.kind {
        ExprKind::Name(n) => push(out, n),
        ExprKind::Tuple(items) | ExprKind::List(items) => {
            for it in items {
                collect_target_names(it, out);
            }
        }
        _ => {}
    }
}

pub fn analyze(stmts: &[Stmt]) -> NameInfo {
    let mut w = Walker {
        info: NameInfo::default(),
        local: Vec::new(),
    };
    w.stmts(stmts, true);
    w.info
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_fragment;

    fn info(src: &str) -> NameInfo {
        analyze(&parse_fragment(src).unwrap().body)
    }

    #[test]
    fn indexed_loop() {
        let i = info("loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]");
        assert_eq!(i.free, ["range", "len", "losses"]);
        assert_eq!(i.bound, ["loss", "i"]);
        assert_eq!(i.loop_targets, ["i"]);
        assert_eq!(i.top_level_bound, ["loss"]);
    }

    #[test]
    fn mutation_and_calls() {
        let i = info("for k, v in add_dict.items():\n    d[k] = v");
        assert_eq!(i.free, ["add_dict", "d"]);
        assert!(i.mutated.contains(&"d".to_string()));
        let i = info("d = {}\nfor i in array:\n    d.setdefault(i, []).append(f(i))");
        assert_eq!(i.free, ["array", "f"]);
        assert_eq!(i.called, ["f"]);
    }

    #[test]
    fn comprehension_scope() {
        let i = info("t = [elem[i] for i in range(len(elem)) if cond(elem[i])]");
        assert_eq!(i.free, ["range", "len", "elem", "cond"]);
        assert_eq!(i.bound, ["t"]);
    }

    #[test]
    fn augassign_reads_target() {
        let i = info("for idx, item in enumerate(values):\n    if idx != 0:\n        string += \", \"\n    string += item");
        assert_eq!(i.free, ["enumerate", "values", "string"]);
    }
}
