//! Python-subset front end: lexing, parsing, canonical printing and the
//! structural measurements used by the applicability filter.

pub mod ast;
mod lexer;
pub mod names;
mod parser;
mod printer;
pub mod tree;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use ast::*;
pub use printer::{print_expr, print_stmts, quote_str};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unsupported construct: {kind}")]
    Unsupported { kind: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    CpatLhs,
    CpatRhs,
    Variant,
    Test,
    TargetFile,
}

/// Source text plus where it came from. Line endings are normalized on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFragment {
    pub text: String,
    pub origin: Origin,
}

impl SourceFragment {
    pub fn new(text: impl Into<String>, origin: Origin) -> Self {
        let text: String = text.into();
        SourceFragment {
            text: text.replace("\r\n", "\n").replace('\r', "\n"),
            origin,
        }
    }

    pub fn parse(&self) -> Result<Ast, ParseError> {
        parse_fragment(&self.text)
    }
}

impl fmt::Display for SourceFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub fn parse_fragment(src: &str) -> Result<Ast, ParseError> {
    parser::parse(src, false)
}

/// Parse with `:[[name]]` metavariables enabled.
pub fn parse_template(src: &str) -> Result<Ast, ParseError> {
    parser::parse(src, true)
}

pub fn print_canonical(ast: &Ast) -> String {
    printer::print_ast(ast)
}

/// Parse and re-print; `None` when the text does not parse.
pub fn canonicalize(src: &str) -> Option<String> {
    parse_fragment(src).ok().map(|a| print_canonical(&a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ControlKind {
    For,
    While,
    If,
}

/// Multiset of control statements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ControlNodeSet {
    pub counts: BTreeMap<ControlKind, usize>,
}

impl ControlNodeSet {
    pub fn get(&self, k: ControlKind) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.values().all(|&c| c == 0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Multiset containment: every kind occurs at least as often in `other`.
    pub fn is_submultiset_of(&self, other: &ControlNodeSet) -> bool {
        self.counts.iter().all(|(k, &c)| other.get(*k) >= c)
    }

    pub fn is_subset_of(&self, other: &ControlNodeSet) -> bool {
        self.counts
            .iter()
            .all(|(k, &c)| c == 0 || other.get(*k) > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Declaration {
    FunctionDef(String, usize),
    ClassDef(String, usize),
}

pub fn control_nodes(ast: &Ast) -> ControlNodeSet {
    control_nodes_in(&ast.body)
}

pub fn control_nodes_in(stmts: &[Stmt]) -> ControlNodeSet {
    let mut set = ControlNodeSet::default();
    for s in stmts {
        s.walk_stmts(&mut |s| {
            let k = match s.kind {
                StmtKind::For { .. } => ControlKind::For,
                StmtKind::While { .. } => ControlKind::While,
                StmtKind::If { .. } => ControlKind::If,
                _ => return,
            };
            *set.counts.entry(k).or_insert(0) += 1;
        });
    }
    set
}

pub fn collect_declarations(ast: &Ast) -> std::collections::BTreeSet<Declaration> {
    let mut out = std::collections::BTreeSet::new();
    ast.walk_stmts(&mut |s| match &s.kind {
        StmtKind::FunctionDef { name, params, .. } => {
            out.insert(Declaration::FunctionDef(name.clone(), params.len()));
        }
        StmtKind::ClassDef { name, bases, .. } => {
            out.insert(Declaration::ClassDef(name.clone(), bases.len()));
        }
        _ => {}
    });
    out
}

/// Every statement and expression counts one, as do the auxiliary nodes
/// (keyword, parameter, alias, comprehension clause, with-item).
pub fn count_nodes(ast: &Ast) -> usize {
    ast.body.iter().map(count_stmt).sum()
}

pub fn count_stmt(s: &Stmt) -> usize {
    let own: usize = s.exprs().into_iter().map(count_expr).sum();
    let aux = match &s.kind {
        StmtKind::FunctionDef { params, .. } => params.len(),
        StmtKind::Import(names) | StmtKind::ImportFrom { names, .. } => names.len(),
        StmtKind::With { items, .. } => items.len(),
        _ => 0,
    };
    let nested: usize = s
        .bodies()
        .into_iter()
        .flat_map(|b| b.iter())
        .map(count_stmt)
        .sum();
    1 + own + aux + nested
}

pub fn count_expr(e: &Expr) -> usize {
    let aux = match &e.kind {
        ExprKind::Call { keywords, .. } => keywords.len(),
        ExprKind::Lambda { params, .. } => params.len(),
        ExprKind::Comprehension { generators, .. } => generators.len(),
        _ => 0,
    };
    1 + aux + e.children().into_iter().map(count_expr).sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;

    const L1: &str = "result = 0\nfor elem in elements:\n    result = elem + result";
    const L2: &str = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]";

    fn kinds(stmts: &[Stmt]) -> Vec<&'static str> {
        stmts
            .iter()
            .map(|s| match s.kind {
                StmtKind::Assign { .. } => "Assign",
                StmtKind::AugAssign { .. } => "AugAssign",
                StmtKind::For { .. } => "For",
                _ => "other",
            })
            .collect()
    }

    #[test]
    fn sum_loop_shape() {
        let a = parse_fragment(L1).unwrap();
        assert_eq!(kinds(&a.body), ["Assign", "For"]);
        let StmtKind::For { body, .. } = &a.body[1].kind else {
            panic!()
        };
        assert_eq!(kinds(body), ["Assign"]);
    }

    #[test]
    fn empty_is_syntax_error() {
        assert!(matches!(parse_fragment(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_fragment("  \n\n"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn augassign_in_for() {
        let a = parse_fragment(
            "for i in range(1, len(temp_list)):\n    temp_list[i] += temp_list[i - 1]",
        )
        .unwrap();
        let StmtKind::For { body, .. } = &a.body[0].kind else {
            panic!()
        };
        assert_eq!(kinds(body), ["AugAssign"]);
    }

    #[test]
    fn unsupported_constructs() {
        for src in [
            "async def f():\n    pass",
            "x = f\"{a}\"",
            "try:\n    x = 1\nexcept E:\n    pass",
            "del x",
            "x: int = 1",
            "f(*args)",
            "x = {1, 2}",
        ] {
            assert!(
                matches!(parse_fragment(src), Err(ParseError::Unsupported { .. })),
                "{src}"
            );
        }
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let e = parse_fragment("x = 1\nfor elem in elements result += elem").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 2, .. }), "{e:?}");
        assert!(parse_fragment("x = (1").is_err());
        assert!(parse_fragment("  x = 1").is_err());
        assert!(parse_fragment("if x:\ny = 1").is_err());
        assert!(parse_fragment("1 = x").is_err());
    }

    #[test]
    fn canonical_print_normalizes() {
        assert_eq!(print_canonical(&parse_fragment("x=1").unwrap()), "x = 1");
        let rhs = "result = numpy.sum(elements)";
        assert_eq!(print_canonical(&parse_fragment(rhs).unwrap()), rhs);
        let once = print_canonical(&parse_fragment(L1).unwrap());
        let twice = print_canonical(&parse_fragment(&once).unwrap());
        assert_eq!(once, L1);
        assert_eq!(once, twice);
    }

    #[test]
    fn printer_round_trips_awkward_expressions() {
        for src in [
            "x = (a + b) * c",
            "x = a - (b - c)",
            "x = -(a ** b)",
            "x = (-a) ** b",
            "x = a ** -b",
            "x = not (a and b)",
            "x = (a or b) and c",
            "x = (a if b else c) if d else e",
            "x = [i for i in range(10) if i % 2 == 0]",
            "t = [elem[i] for i in range(len(elem)) if cond(elem[i])]",
            "x = {k: v for k, v in d.items()}",
            "x = sum(i * i for i in xs)",
            "x = f((i for i in xs), 1)",
            "a, b = b, a",
            "x = (1,)",
            "x = ()",
            "for k, v in add_dict.items():\n    d[k] = v",
            "cum_arr.append(sum(array[:i + 1]))",
            "x = a[1:2, ::3]",
            "if a:\n    x = 1\nelif b:\n    x = 2\nelse:\n    x = 3",
            "x = lambda a, b=2: a + b",
            "s = \"a\\\"b\\n\"",
            "from ..pkg import a as b, c",
            "import numpy as np, os.path",
            "with open(p) as fh, lock:\n    data = fh.read()",
            "class A(B):\n    def m(self, x=None):\n        return x, self",
            "x = a < b < c",
            "x = a not in b and c is not None",
            "x = 1.5e-07 + 0.1",
            "assert x == 6, \"bad\"",
        ] {
            let a = parse_fragment(src).unwrap();
            let p = print_canonical(&a);
            let b = parse_fragment(&p).unwrap_or_else(|e| panic!("{src} -> {p}: {e}"));
            assert_eq!(a, b, "{src} -> {p}");
            assert_eq!(print_canonical(&b), p);
        }
    }

    #[test]
    fn node_counts() {
        assert_eq!(count_nodes(&parse_fragment("x = 1").unwrap()), 3);
        assert_eq!(count_nodes(&Ast::default()), 0);
        let lhs = count_nodes(&parse_fragment(L1).unwrap());
        let rhs = count_nodes(&parse_fragment("result = numpy.sum(elements)").unwrap());
        assert!(lhs > rhs, "{lhs} vs {rhs}");
    }

    #[test]
    fn control_node_multisets() {
        let c = control_nodes(&parse_fragment(L1).unwrap());
        assert_eq!(c.get(ControlKind::For), 1);
        assert_eq!(c.total(), 1);
        assert!(control_nodes(&parse_fragment("common = []").unwrap()).is_empty());
        let row3 = "common = []\nfor i in l1:\n    if i in l2 and i not in common:\n        common.append(i)";
        let c = control_nodes(&parse_fragment(row3).unwrap());
        assert_eq!((c.get(ControlKind::For), c.get(ControlKind::If)), (1, 1));
        assert_eq!(c.total(), 2);
    }

    #[test]
    fn declarations() {
        assert!(collect_declarations(&parse_fragment(L1).unwrap()).is_empty());
        let d = collect_declarations(&parse_fragment("def helper(x):\n    return x").unwrap());
        assert_eq!(
            d.into_iter().collect::<Vec<_>>(),
            [Declaration::FunctionDef("helper".into(), 1)]
        );
        assert!(collect_declarations(&parse_fragment("x = 0\ny = x").unwrap()).is_empty());
    }

    #[test]
    fn structural_equality_ignores_layout() {
        let a = parse_fragment(L2).unwrap();
        let b = parse_fragment("loss=0\n\nfor i in range( len(losses) ):  # c\n  loss += losses[i]\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn metavariables_only_in_template_mode() {
        assert!(parse_fragment(":[[v0]] = 0").is_err());
        let t = parse_template(":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v0]] + :[[v1]]").unwrap();
        assert_eq!(t.body.len(), 2);
        let s = parse_template(":[[v0]]").unwrap();
        assert!(matches!(s.body[0].kind, StmtKind::Meta(ref m) if m == "v0"));
    }
}
