//! Typed tree for the supported Python subset.
//!
//! Every node carries a [`Span`]. Spans never take part in equality: two trees
//! compare equal when their kinds, children and identifier text agree, no
//! matter where they came from or how they were formatted.

use std::fmt;

#[derive(Clone, Copy, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
}

impl Span {
    pub fn new(start: usize, end: usize, line: usize) -> Self {
        Span { start, end, line }
    }

    pub fn to(self, other: Span) -> Span {
        Span {
            start: self.start,
            end: other.end.max(self.end),
            line: self.line,
        }
    }
}

impl PartialEq for Span {
    fn eq(&self, _other: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}@{}", self.start, self.end, self.line)
    }
}

/// A parsed fragment: an ordered list of top-level statements.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Ast {
    pub body: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Assign {
        targets: Vec<Expr>,
        value: Expr,
    },
    AugAssign {
        target: Expr,
        op: BinOpKind,
        value: Expr,
    },
    For {
        target: Expr,
        iter: Expr,
        body: Vec<Stmt>,
    },
    While {
        test: Expr,
        body: Vec<Stmt>,
    },
    If {
        test: Expr,
        body: Vec<Stmt>,
        orelse: Vec<Stmt>,
    },
    With {
        items: Vec<WithItem>,
        body: Vec<Stmt>,
    },
    Expr(Expr),
    FunctionDef {
        name: String,
        params: Vec<Param>,
        body: Vec<Stmt>,
    },
    ClassDef {
        name: String,
        bases: Vec<Expr>,
        body: Vec<Stmt>,
    },
    Return(Option<Expr>),
    Import(Vec<Alias>),
    ImportFrom {
        module: String,
        level: usize,
        names: Vec<Alias>,
    },
    Assert {
        test: Expr,
        msg: Option<Expr>,
    },
    Pass,
    Break,
    Continue,
    /// Template metavariable standing for exactly one statement.
    Meta(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct WithItem {
    pub context: Expr,
    pub alias: Option<Expr>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Param {
    pub name: String,
    pub default: Option<Expr>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Alias {
    pub name: String,
    pub asname: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Name(String),
    Attribute {
        value: Box<Expr>,
        attr: String,
    },
    Subscript {
        value: Box<Expr>,
        index: Box<Expr>,
    },
    Slice {
        lower: Option<Box<Expr>>,
        upper: Option<Box<Expr>>,
        step: Option<Box<Expr>>,
    },
    Call {
        func: Box<Expr>,
        args: Vec<Expr>,
        keywords: Vec<Keyword>,
    },
    Literal(Literal),
    BinOp {
        left: Box<Expr>,
        op: BinOpKind,
        right: Box<Expr>,
    },
    UnaryOp {
        op: UnaryOpKind,
        operand: Box<Expr>,
    },
    BoolOp {
        op: BoolOpKind,
        values: Vec<Expr>,
    },
    Compare {
        left: Box<Expr>,
        ops: Vec<CmpOp>,
        comparators: Vec<Expr>,
    },
    IfExp {
        test: Box<Expr>,
        body: Box<Expr>,
        orelse: Box<Expr>,
    },
    Lambda {
        params: Vec<Param>,
        body: Box<Expr>,
    },
    List(Vec<Expr>),
    Tuple(Vec<Expr>),
    Dict(Vec<(Expr, Expr)>),
    Comprehension {
        kind: CompKind,
        elt: Box<Expr>,
        /// Value expression for dict comprehensions.
        value: Option<Box<Expr>>,
        generators: Vec<CompFor>,
    },
    /// Template metavariable standing for one expression.
    Meta(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Keyword {
    pub name: String,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompFor {
    pub target: Expr,
    pub iter: Expr,
    pub ifs: Vec<Expr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompKind {
    List,
    Set,
    Dict,
    Generator,
}

#[derive(Clone, Debug)]
pub enum Literal {
    Int(i64),
    Float(f64),
    Str(String),
    Bool(bool),
    None,
}

impl PartialEq for Literal {
    fn eq(&self, other: &Literal) -> bool {
        match (self, other) {
            (Literal::Int(a), Literal::Int(b)) => a == b,
            (Literal::Float(a), Literal::Float(b)) => a.to_bits() == b.to_bits(),
            (Literal::Str(a), Literal::Str(b)) => a == b,
            (Literal::Bool(a), Literal::Bool(b)) => a == b,
            (Literal::None, Literal::None) => true,
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOpKind {
    Add,
    Sub,
    Mul,
    MatMul,
    Div,
    FloorDiv,
    Mod,
    Pow,
    LShift,
    RShift,
    BitOr,
    BitXor,
    BitAnd,
}

impl BinOpKind {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOpKind::Add => "+",
            BinOpKind::Sub => "-",
            BinOpKind::Mul => "*",
            BinOpKind::MatMul => "@",
            BinOpKind::Div => "/",
            BinOpKind::FloorDiv => "//",
            BinOpKind::Mod => "%",
            BinOpKind::Pow => "**",
            BinOpKind::LShift => "<<",
            BinOpKind::RShift => ">>",
            BinOpKind::BitOr => "|",
            BinOpKind::BitXor => "^",
            BinOpKind::BitAnd => "&",
        }
    }

    pub fn from_symbol(s: &str) -> Option<BinOpKind> {
        Some(match s {
            "+" => BinOpKind::Add,
            "-" => BinOpKind::Sub,
            "*" => BinOpKind::Mul,
            "@" => BinOpKind::MatMul,
            "/" => BinOpKind::Div,
            "//" => BinOpKind::FloorDiv,
            "%" => BinOpKind::Mod,
            "**" => BinOpKind::Pow,
            "<<" => BinOpKind::LShift,
            ">>" => BinOpKind::RShift,
            "|" => BinOpKind::BitOr,
            "^" => BinOpKind::BitXor,
            "&" => BinOpKind::BitAnd,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnaryOpKind {
    Neg,
    Pos,
    Invert,
    Not,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoolOpKind {
    And,
    Or,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Eq,
    NotEq,
    Lt,
    LtE,
    Gt,
    GtE,
    In,
    NotIn,
    Is,
    IsNot,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Eq => "==",
            CmpOp::NotEq => "!=",
            CmpOp::Lt => "<",
            CmpOp::LtE => "<=",
            CmpOp::Gt => ">",
            CmpOp::GtE => ">=",
            CmpOp::In => "in",
            CmpOp::NotIn => "not in",
            CmpOp::Is => "is",
            CmpOp::IsNot => "is not",
        }
    }
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    pub fn name(id: &str) -> Self {
        Expr::new(ExprKind::Name(id.to_string()), Span::default())
    }

    pub fn as_name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Name(n) => Some(n),
            _ => None,
        }
    }

    /// Direct children in source order.
    pub fn children(&self) -> Vec<&Expr> {
        let mut out = Vec::new();
        match &self.kind {
            ExprKind::Name(_) | ExprKind::Literal(_) | ExprKind::Meta(_) => {}
            ExprKind::Attribute { value, .. } => out.push(value.as_ref()),
            ExprKind::Subscript { value, index } => {
                out.push(value.as_ref());
                out.push(index.as_ref());
            }
            ExprKind::Slice { lower, upper, step } => {
                for part in [lower, upper, step].into_iter().flatten() {
                    out.push(part.as_ref());
                }
            }
            ExprKind::Call {
                func,
                args,
                keywords,
            } => {
                out.push(func.as_ref());
                out.extend(args.iter());
                out.extend(keywords.iter().map(|k| &k.value));
            }
            ExprKind::BinOp { left, right, .. } => {
                out.push(left.as_ref());
                out.push(right.as_ref());
            }
            ExprKind::UnaryOp { operand, .. } => out.push(operand.as_ref()),
            ExprKind::BoolOp { values, .. } => out.extend(values.iter()),
            ExprKind::Compare {
                left, comparators, ..
            } => {
                out.push(left.as_ref());
                out.extend(comparators.iter());
            }
            ExprKind::IfExp { test, body, orelse } => {
                out.push(body.as_ref());
                out.push(test.as_ref());
                out.push(orelse.as_ref());
            }
            ExprKind::Lambda { params, body } => {
                out.extend(params.iter().filter_map(|p| p.default.as_ref()));
                out.push(body.as_ref());
            }
            ExprKind::List(items) | ExprKind::Tuple(items) => out.extend(items.iter()),
            ExprKind::Dict(pairs) => {
                for (k, v) in pairs {
                    out.push(k);
                    out.push(v);
                }
            }
            ExprKind::Comprehension {
                elt,
                value,
                generators,
                ..
            } => {
                out.push(elt.as_ref());
                if let Some(v) = value {
                    out.push(v.as_ref());
                }
                for g in generators {
                    out.push(&g.target);
                    out.push(&g.iter);
                    out.extend(g.ifs.iter());
                }
            }
        }
        out
    }

    /// Pre-order walk over this expression and all nested expressions.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }
}

impl Stmt {
    pub fn new(kind: StmtKind, span: Span) -> Self {
        Stmt { kind, span }
    }

    /// Nested statement lists, in source order.
    pub fn bodies(&self) -> Vec<&Vec<Stmt>> {
        match &self.kind {
            StmtKind::For { body, .. }
            | StmtKind::While { body, .. }
            | StmtKind::With { body, .. }
            | StmtKind::FunctionDef { body, .. }
            | StmtKind::ClassDef { body, .. } => vec![body],
            StmtKind::If { body, orelse, .. } => vec![body, orelse],
            _ => Vec::new(),
        }
    }

    /// Expressions owned directly by this statement (not by nested statements).
    pub fn exprs(&self) -> Vec<&Expr> {
        match &self.kind {
            StmtKind::Assign { targets, value } => {
                let mut v: Vec<&Expr> = targets.iter().collect();
                v.push(value);
                v
            }
            StmtKind::AugAssign { target, value, .. } => vec![target, value],
            StmtKind::For { target, iter, .. } => vec![target, iter],
            StmtKind::While { test, .. } | StmtKind::If { test, .. } => vec![test],
            StmtKind::With { items, .. } => {
                let mut v = Vec::new();
                for it in items {
                    v.push(&it.context);
                    if let Some(a) = &it.alias {
                        v.push(a);
                    }
                }
                v
            }
            StmtKind::Expr(e) => vec![e],
            StmtKind::FunctionDef { params, .. } => {
                params.iter().filter_map(|p| p.default.as_ref()).collect()
            }
            StmtKind::ClassDef { bases, .. } => bases.iter().collect(),
            StmtKind::Return(v) => v.iter().collect(),
            StmtKind::Assert { test, msg } => {
                let mut v = vec![test];
                if let Some(m) = msg {
                    v.push(m);
                }
                v
            }
            StmtKind::Import(_)
            | StmtKind::ImportFrom { .. }
            | StmtKind::Pass
            | StmtKind::Break
            | StmtKind::Continue
            | StmtKind::Meta(_) => Vec::new(),
        }
    }

    /// Pre-order walk over this statement and every nested statement.
    pub fn walk_stmts<'a>(&'a self, f: &mut dyn FnMut(&'a Stmt)) {
        f(self);
        for body in self.bodies() {
            for s in body {
                s.walk_stmts(f);
            }
        }
    }

    /// Every expression reachable from this statement, nested statements included.
    pub fn walk_exprs<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        self.walk_stmts(&mut |s| {
            for e in s.exprs() {
                e.walk(f);
            }
        });
    }
}

impl Ast {
    pub fn walk_stmts<'a>(&'a self, f: &mut dyn FnMut(&'a Stmt)) {
        for s in &self.body {
            s.walk_stmts(f);
        }
    }

    pub fn walk_exprs<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        for s in &self.body {
            s.walk_exprs(f);
        }
    }

    /// Every statement list in the tree (the root list first), pre-order.
    pub fn statement_lists(&self) -> Vec<&Vec<Stmt>> {
        fn collect<'a>(list: &'a Vec<Stmt>, out: &mut Vec<&'a Vec<Stmt>>) {
            out.push(list);
            for s in list {
                for b in s.bodies() {
                    if !b.is_empty() {
                        collect(b, out);
                    }
                }
            }
        }
        let mut out = Vec::new();
        collect(&self.body, &mut out);
        out
    }
}
