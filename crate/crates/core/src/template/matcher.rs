use std::collections::BTreeMap;

use super::RewriteRule;
use crate::syntax::{Ast, CompFor, Expr, ExprKind, Keyword, Param, Stmt, StmtKind, WithItem};

#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    Expr(Expr),
    Stmt(Stmt),
}

impl Bound {
    pub fn as_expr(&self) -> Option<&Expr> {
        match self {
            Bound::Expr(e) => Some(e),
            Bound::Stmt(_) => None,
        }
    }

    /// Canonical text of the bound subtree.
    pub fn text(&self) -> String {
        match self {
            Bound::Expr(e) => crate::syntax::print_expr(e),
            Bound::Stmt(s) => crate::syntax::print_stmts(std::slice::from_ref(s)),
        }
    }
}

/// Where a match sits in the target: a contiguous run of statements in one list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchSite {
    /// Index of the statement list in `Ast::statement_lists` order.
    pub list: usize,
    pub first: usize,
    pub len: usize,
    pub start: usize,
    pub end: usize,
    pub line: usize,
}

impl MatchSite {
    pub fn overlaps(&self, other: &MatchSite) -> bool {
        self.start < other.end && other.start < self.end
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatchBinding {
    pub vars: BTreeMap<String, Bound>,
    pub site: MatchSite,
}

impl MatchBinding {
    pub fn expr(&self, var: &str) -> Option<&Expr> {
        self.vars.get(var).and_then(|b| b.as_expr())
    }
}

pub fn find_matches(rule: &RewriteRule, target: &Ast) -> Vec<MatchBinding> {
    find_matches_in(&rule.lhs.body, target)
}

/// All windows of `pattern.len()` statements, in any statement list, that unify
/// with the pattern. Results are in source order.
pub fn find_matches_in(pattern: &[Stmt], target: &Ast) -> Vec<MatchBinding> {
    let k = pattern.len();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for (li, list) in target.statement_lists().into_iter().enumerate() {
        if list.len() < k {
            continue;
        }
        for first in 0..=list.len() - k {
            let mut m = Matcher::default();
            if m.stmts(pattern, &list[first..first + k]) {
                out.push(MatchBinding {
                    vars: m.vars,
                    site: MatchSite {
                        list: li,
                        first,
                        len: k,
                        start: list[first].span.start,
                        end: list[first + k - 1].span.end,
                        line: list[first].span.line,
                    },
                });
            }
        }
    }
    out.sort_by_key(|b| (b.site.start, b.site.end));
    out
}

#[derive(Default)]
struct Matcher {
    vars: BTreeMap<String, Bound>,
}

impl Matcher {
    fn bind(&mut self, name: &str, b: Bound) -> bool {
        match self.vars.get(name) {
            Some(prev) => *prev == b,
            None => {
                self.vars.insert(name.to_string(), b);
                true
            }
        }
    }

    fn stmts(&mut self, p: &[Stmt], t: &[Stmt]) -> bool {
        p.len() == t.len() && p.iter().zip(t).all(|(a, b)| self.stmt(a, b))
    }

    fn exprs(&mut self, p: &[Expr], t: &[Expr]) -> bool {
        p.len() == t.len() && p.iter().zip(t).all(|(a, b)| self.expr(a, b))
    }

    fn opt(&mut self, p: &Option<Expr>, t: &Option<Expr>) -> bool {
        match (p, t) {
            (None, None) => true,
            (Some(a), Some(b)) => self.expr(a, b),
            _ => false,
        }
    }

    fn opt_box(&mut self, p: &Option<Box<Expr>>, t: &Option<Box<Expr>>) -> bool {
        match (p, t) {
            (None, None) => true,
            (Some(a), Some(b)) => self.expr(a, b),
            _ => false,
        }
    }

    fn params(&mut self, p: &[Param], t: &[Param]) -> bool {
        p.len() == t.len()
            && p.iter()
                .zip(t)
                .all(|(a, b)| a.name == b.name && self.opt(&a.default, &b.default))
    }

    fn stmt(&mut self, p: &Stmt, t: &Stmt) -> bool {
        use StmtKind::*;
        match (&p.kind, &t.kind) {
            (Meta(m), _) => self.bind(m, Bound::Stmt(t.clone())),
            (Assign { targets: a, value: v }, Assign { targets: b, value: w }) => {
                self.exprs(a, b) && self.expr(v, w)
            }
            (
                AugAssign { target: a, op: o1, value: v },
                AugAssign { target: b, op: o2, value: w },
            ) => o1 == o2 && self.expr(a, b) && self.expr(v, w),
            (
                For { target: a, iter: i, body: x },
                For { target: b, iter: j, body: y },
            ) => self.expr(a, b) && self.expr(i, j) && self.stmts(x, y),
            (While { test: a, body: x }, While { test: b, body: y }) => {
                self.expr(a, b) && self.stmts(x, y)
            }
            (
                If { test: a, body: x, orelse: xe },
                If { test: b, body: y, orelse: ye },
            ) => self.expr(a, b) && self.stmts(x, y) && self.stmts(xe, ye),
            (With { items: a, body: x }, With { items: b, body: y }) => {
                self.with_items(a, b) && self.stmts(x, y)
            }
            (Expr(a), Expr(b)) => self.expr(a, b),
            (
                FunctionDef { name: n1, params: p1, body: x },
                FunctionDef { name: n2, params: p2, body: y },
            ) => n1 == n2 && self.params(p1, p2) && self.stmts(x, y),
            (
                ClassDef { name: n1, bases: b1, body: x },
                ClassDef { name: n2, bases: b2, body: y },
            ) => n1 == n2 && self.exprs(b1, b2) && self.stmts(x, y),
            (Return(a), Return(b)) => self.opt(a, b),
            (Import(a), Import(b)) => a == b,
            (
                ImportFrom { module: m1, level: l1, names: a },
                ImportFrom { module: m2, level: l2, names: b },
            ) => m1 == m2 && l1 == l2 && a == b,
            (Assert { test: a, msg: x }, Assert { test: b, msg: y }) => {
                self.expr(a, b) && self.opt(x, y)
            }
            (Pass, Pass) | (Break, Break) | (Continue, Continue) => true,
            _ => false,
        }
    }

    fn with_items(&mut self, p: &[WithItem], t: &[WithItem]) -> bool {
        p.len() == t.len()
            && p.iter()
                .zip(t)
                .all(|(a, b)| self.expr(&a.context, &b.context) && self.opt(&a.alias, &b.alias))
    }

    fn keywords(&mut self, p: &[Keyword], t: &[Keyword]) -> bool {
        p.len() == t.len()
            && p.iter()
                .zip(t)
                .all(|(a, b)| a.name == b.name && self.expr(&a.value, &b.value))
    }

    fn generators(&mut self, p: &[CompFor], t: &[CompFor]) -> bool {
        p.len() == t.len()
            && p.iter().zip(t).all(|(a, b)| {
                self.expr(&a.target, &b.target) && self.expr(&a.iter, &b.iter) && self.exprs(&a.ifs, &b.ifs)
            })
    }

    fn expr(&mut self, p: &Expr, t: &Expr) -> bool {
        use ExprKind::*;
        match (&p.kind, &t.kind) {
            (Meta(m), _) => self.bind(m, Bound::Expr(t.clone())),
            (Name(a), Name(b)) => a == b,
            (Literal(a), Literal(b)) => a == b,
            (Attribute { value: a, attr: x }, Attribute { value: b, attr: y }) => {
                x == y && self.expr(a, b)
            }
            (Subscript { value: a, index: i }, Subscript { value: b, index: j }) => {
                self.expr(a, b) && self.expr(i, j)
            }
            (
                Slice { lower: a1, upper: a2, step: a3 },
                Slice { lower: b1, upper: b2, step: b3 },
            ) => self.opt_box(a1, b1) && self.opt_box(a2, b2) && self.opt_box(a3, b3),
            (
                Call { func: f, args: a, keywords: k },
                Call { func: g, args: b, keywords: l },
            ) => self.expr(f, g) && self.exprs(a, b) && self.keywords(k, l),
            (
                BinOp { left: a, op: o1, right: x },
                BinOp { left: b, op: o2, right: y },
            ) => o1 == o2 && self.expr(a, b) && self.expr(x, y),
            (UnaryOp { op: o1, operand: a }, UnaryOp { op: o2, operand: b }) => {
                o1 == o2 && self.expr(a, b)
            }
            (BoolOp { op: o1, values: a }, BoolOp { op: o2, values: b }) => {
                o1 == o2 && self.exprs(a, b)
            }
            (
                Compare { left: a, ops: o1, comparators: x },
                Compare { left: b, ops: o2, comparators: y },
            ) => o1 == o2 && self.expr(a, b) && self.exprs(x, y),
            (
                IfExp { test: a, body: x, orelse: xe },
                IfExp { test: b, body: y, orelse: ye },
            ) => self.expr(a, b) && self.expr(x, y) && self.expr(xe, ye),
            (Lambda { params: p1, body: a }, Lambda { params: p2, body: b }) => {
                self.params(p1, p2) && self.expr(a, b)
            }
            (List(a), List(b)) | (Tuple(a), Tuple(b)) => self.exprs(a, b),
            (Dict(a), Dict(b)) => {
                a.len() == b.len()
                    && a.iter()
                        .zip(b)
                        .all(|((k1, v1), (k2, v2))| self.expr(k1, k2) && self.expr(v1, v2))
            }
            (
                Comprehension { kind: k1, elt: a, value: v1, generators: g1 },
                Comprehension { kind: k2, elt: b, value: v2, generators: g2 },
            ) => k1 == k2 && self.expr(a, b) && self.opt_box(v1, v2) && self.generators(g1, g2),
            _ => false,
        }
    }
}

/// Substitute bound subtrees for the metavariables of a template.
/// Unbound variables are left in place.
pub fn instantiate(template: &[Stmt], vars: &BTreeMap<String, Bound>) -> Vec<Stmt> {
    template.iter().map(|s| inst_stmt(s, vars)).collect()
}

fn inst_stmt(s: &Stmt, vars: &BTreeMap<String, Bound>) -> Stmt {
    use StmtKind::*;
    let e = |x: &crate::syntax::Expr| inst_expr(x, vars);
    let oe = |x: &Option<crate::syntax::Expr>| x.as_ref().map(|x| inst_expr(x, vars));
    let body = |b: &[Stmt]| instantiate(b, vars);
    let kind = match &s.kind {
        Meta(m) => match vars.get(m) {
            Some(Bound::Stmt(st)) => return st.clone(),
            _ => Meta(m.clone()),
        },
        Assign { targets, value } => Assign {
            targets: targets.iter().map(e).collect(),
            value: e(value),
        },
        AugAssign { target, op, value } => AugAssign {
            target: e(target),
            op: *op,
            value: e(value),
        },
        For { target, iter, body: b } => For {
            target: e(target),
            iter: e(iter),
            body: body(b),
        },
        While { test, body: b } => While {
            test: e(test),
            body: body(b),
        },
        If { test, body: b, orelse } => If {
            test: e(test),
            body: body(b),
            orelse: body(orelse),
        },
        With { items, body: b } => With {
            items: items
                .iter()
                .map(|it| WithItem {
                    context: e(&it.context),
                    alias: oe(&it.alias),
                })
                .collect(),
            body: body(b),
        },
        Expr(x) => Expr(e(x)),
        FunctionDef { name, params, body: b } => FunctionDef {
            name: name.clone(),
            params: inst_params(params, vars),
            body: body(b),
        },
        ClassDef { name, bases, body: b } => ClassDef {
            name: name.clone(),
            bases: bases.iter().map(e).collect(),
            body: body(b),
        },
        Return(v) => Return(oe(v)),
        Assert { test, msg } => Assert {
            test: e(test),
            msg: oe(msg),
        },
        other => other.clone(),
    };
    Stmt::new(kind, s.span)
}

fn inst_params(params: &[Param], vars: &BTreeMap<String, Bound>) -> Vec<Param> {
    params
        .iter()
        .map(|p| Param {
            name: p.name.clone(),
            default: p.default.as_ref().map(|d| inst_expr(d, vars)),
            span: p.span,
        })
        .collect()
}

fn inst_expr(x: &Expr, vars: &BTreeMap<String, Bound>) -> Expr {
    use ExprKind::*;
    let e = |y: &Expr| inst_expr(y, vars);
    let b = |y: &Expr| Box::new(inst_expr(y, vars));
    let ob = |y: &Option<Box<Expr>>| y.as_ref().map(|y| Box::new(inst_expr(y, vars)));
    let kind = match &x.kind {
        Meta(m) => match vars.get(m) {
            Some(Bound::Expr(bound)) => return bound.clone(),
            _ => Meta(m.clone()),
        },
        Name(_) | Literal(_) => return x.clone(),
        Attribute { value, attr } => Attribute {
            value: b(value),
            attr: attr.clone(),
        },
        Subscript { value, index } => Subscript {
            value: b(value),
            index: b(index),
        },
        Slice { lower, upper, step } => Slice {
            lower: ob(lower),
            upper: ob(upper),
            step: ob(step),
        },
        Call { func, args, keywords } => Call {
            func: b(func),
            args: args.iter().map(e).collect(),
            keywords: keywords
                .iter()
                .map(|k| Keyword {
                    name: k.name.clone(),
                    value: e(&k.value),
                })
                .collect(),
        },
        BinOp { left, op, right } => BinOp {
            left: b(left),
            op: *op,
            right: b(right),
        },
        UnaryOp { op, operand } => UnaryOp {
            op: *op,
            operand: b(operand),
        },
        BoolOp { op, values } => BoolOp {
            op: *op,
            values: values.iter().map(e).collect(),
        },
        Compare { left, ops, comparators } => Compare {
            left: b(left),
            ops: ops.clone(),
            comparators: comparators.iter().map(e).collect(),
        },
        IfExp { test, body, orelse } => IfExp {
            test: b(test),
            body: b(body),
            orelse: b(orelse),
        },
        Lambda { params, body } => Lambda {
            params: inst_params(params, vars),
            body: b(body),
        },
        List(items) => List(items.iter().map(e).collect()),
        Tuple(items) => Tuple(items.iter().map(e).collect()),
        Dict(pairs) => Dict(pairs.iter().map(|(k, v)| (e(k), e(v))).collect()),
        Comprehension { kind, elt, value, generators } => Comprehension {
            kind: *kind,
            elt: b(elt),
            value: ob(value),
            generators: generators
                .iter()
                .map(|g| CompFor {
                    target: e(&g.target),
                    iter: e(&g.iter),
                    ifs: g.ifs.iter().map(e).collect(),
                })
                .collect(),
        },
    };
    Expr::new(kind, x.span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_fragment;
    use crate::template::parse_rule;

    const SUM_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])";
    const INDEXED_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])";
    const INDEXED_LOOP: &str = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]";

    fn names(b: &MatchBinding) -> Vec<(String, String)> {
        b.vars.iter().map(|(k, v)| (k.clone(), v.text())).collect()
    }

    #[test]
    fn sum_rule_binds_renamed_loop() {
        let r = parse_rule(SUM_RULE).unwrap();
        let t = parse_fragment("total = 0\nfor x in xs:\n    total = x + total").unwrap();
        let m = find_matches(&r, &t);
        assert_eq!(m.len(), 1);
        assert_eq!(
            names(&m[0]),
            [("v0".into(), "total".into()), ("v1".into(), "x".into()), ("v2".into(), "xs".into())]
        );
    }

    #[test]
    fn sum_rule_misses_indexed_loop() {
        let r = parse_rule(SUM_RULE).unwrap();
        assert!(find_matches(&r, &parse_fragment(INDEXED_LOOP).unwrap()).is_empty());
    }

    #[test]
    fn indexed_rule_binds_indexed_loop() {
        let r = parse_rule(INDEXED_RULE).unwrap();
        let m = find_matches(&r, &parse_fragment(INDEXED_LOOP).unwrap());
        assert_eq!(m.len(), 1);
        assert_eq!(
            names(&m[0]),
            [("v0".into(), "loss".into()), ("v1".into(), "i".into()), ("v2".into(), "losses".into())]
        );
    }

    #[test]
    fn repeated_vars_must_agree() {
        let r = parse_rule(SUM_RULE).unwrap();
        let t = parse_fragment("total = 0\nfor x in xs:\n    other = x + total").unwrap();
        assert!(find_matches(&r, &t).is_empty());
    }

    #[test]
    fn matches_inside_nested_blocks_in_source_order() {
        let r = parse_rule(SUM_RULE).unwrap();
        let src = "def f(xs):\n    s = 0\n    for x in xs:\n        s = x + s\n    return s\nif ok:\n    t = 0\n    for y in ys:\n        t = y + t";
        let m = find_matches(&r, &parse_fragment(src).unwrap());
        assert_eq!(m.len(), 2);
        assert!(m[0].site.start < m[1].site.start);
        assert_eq!(m[0].site.line, 2);
        assert_eq!(&src[m[1].site.start..m[1].site.end], "t = 0\n    for y in ys:\n        t = y + t");
    }

    #[test]
    fn soundness_on_examples() {
        let r = parse_rule(INDEXED_RULE).unwrap();
        let t = parse_fragment(INDEXED_LOOP).unwrap();
        for m in find_matches(&r, &t) {
            let inst = instantiate(&r.lhs.body, &m.vars);
            let list = t.statement_lists()[m.site.list];
            assert_eq!(
                crate::syntax::print_stmts(&inst),
                crate::syntax::print_stmts(&list[m.site.first..m.site.first + m.site.len])
            );
        }
    }
}
