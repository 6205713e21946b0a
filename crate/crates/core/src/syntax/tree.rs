//! Untyped labelled-tree view of an [`Ast`].
//!
//! Used by test oracles that want to reason about structure without going
//! through the typed matcher: statement lists become `Body` nodes, every other
//! node carries its kind plus identifier text in the label.

use super::ast::*;
use super::printer::quote_str;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyntaxTree {
    pub label: String,
    pub children: Vec<SyntaxTree>,
}

impl SyntaxTree {
    fn leaf(label: String) -> Self {
        SyntaxTree {
            label,
            children: Vec::new(),
        }
    }

    fn node(label: impl Into<String>, children: Vec<SyntaxTree>) -> Self {
        SyntaxTree {
            label: label.into(),
            children,
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    /// Node count excluding the synthetic `Body` and `Root` wrappers.
    pub fn real_size(&self) -> usize {
        let own = usize::from(self.label != "Body" && self.label != "Root");
        own + self.children.iter().map(|c| c.real_size()).sum::<usize>()
    }

    pub fn is_stmt_meta(&self) -> Option<&str> {
        self.label.strip_prefix("S:Meta:")
    }

    pub fn is_expr_meta(&self) -> Option<&str> {
        self.label.strip_prefix("E:Meta:")
    }

    pub fn is_stmt(&self) -> bool {
        self.label.starts_with("S:")
    }

    pub fn preorder(&self) -> Vec<&SyntaxTree> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.preorder());
        }
        out
    }
}

pub fn from_ast(ast: &Ast) -> SyntaxTree {
    SyntaxTree::node("Root", vec![body(&ast.body)])
}

pub fn body(stmts: &[Stmt]) -> SyntaxTree {
    SyntaxTree::node("Body", stmts.iter().map(stmt).collect())
}

fn opt(e: &Option<Expr>) -> Vec<SyntaxTree> {
    e.iter().map(expr).collect()
}

fn param(p: &Param) -> SyntaxTree {
    SyntaxTree::node(format!("P:{}", p.name), opt(&p.default))
}

pub fn stmt(s: &Stmt) -> SyntaxTree {
    match &s.kind {
        StmtKind::Assign { targets, value } => {
            let mut c: Vec<_> = targets.iter().map(expr).collect();
            c.push(expr(value));
            SyntaxTree::node("S:Assign", c)
        }
        StmtKind::AugAssign { target, op, value } => SyntaxTree::node(
            format!("S:AugAssign:{}", op.symbol()),
            vec![expr(target), expr(value)],
        ),
        StmtKind::For { target, iter, body: b } => {
            SyntaxTree::node("S:For", vec![expr(target), expr(iter), body(b)])
        }
        StmtKind::While { test, body: b } => SyntaxTree::node("S:While", vec![expr(test), body(b)]),
        StmtKind::If { test, body: b, orelse } => {
            SyntaxTree::node("S:If", vec![expr(test), body(b), body(orelse)])
        }
        StmtKind::With { items, body: b } => {
            let mut c: Vec<_> = items
                .iter()
                .map(|it| {
                    let mut ch = vec![expr(&it.context)];
                    ch.extend(opt(&it.alias));
                    SyntaxTree::node(format!("W:{}", it.alias.is_some() as u8), ch)
                })
                .collect();
            c.push(body(b));
            SyntaxTree::node("S:With", c)
        }
        StmtKind::Expr(e) => SyntaxTree::node("S:Expr", vec![expr(e)]),
        StmtKind::FunctionDef { name, params, body: b } => {
            let mut c: Vec<_> = params.iter().map(param).collect();
            c.push(body(b));
            SyntaxTree::node(format!("S:Def:{}", name), c)
        }
        StmtKind::ClassDef { name, bases, body: b } => {
            let mut c: Vec<_> = bases.iter().map(expr).collect();
            c.push(body(b));
            SyntaxTree::node(format!("S:Class:{}", name), c)
        }
        StmtKind::Return(v) => SyntaxTree::node(format!("S:Return:{}", v.is_some() as u8), opt(v)),
        StmtKind::Import(names) => SyntaxTree::node("S:Import", aliases(names)),
        StmtKind::ImportFrom {
            module,
            level,
            names,
        } => SyntaxTree::node(format!("S:ImportFrom:{}:{}", level, module), aliases(names)),
        StmtKind::Assert { test, msg } => {
            let mut c = vec![expr(test)];
            c.extend(opt(msg));
            SyntaxTree::node(format!("S:Assert:{}", msg.is_some() as u8), c)
        }
        StmtKind::Pass => SyntaxTree::leaf("S:Pass".into()),
        StmtKind::Break => SyntaxTree::leaf("S:Break".into()),
        StmtKind::Continue => SyntaxTree::leaf("S:Continue".into()),
        StmtKind::Meta(m) => SyntaxTree::leaf(format!("S:Meta:{}", m)),
    }
}

fn aliases(names: &[Alias]) -> Vec<SyntaxTree> {
    names
        .iter()
        .map(|a| SyntaxTree::leaf(format!("A:{}:{}", a.name, a.asname.as_deref().unwrap_or(""))))
        .collect()
}

fn boxed(e: &Option<Box<Expr>>) -> Vec<SyntaxTree> {
    e.iter().map(|b| expr(b)).collect()
}

pub fn expr(e: &Expr) -> SyntaxTree {
    match &e.kind {
        ExprKind::Name(n) => SyntaxTree::leaf(format!("E:Name:{}", n)),
        ExprKind::Meta(m) => SyntaxTree::leaf(format!("E:Meta:{}", m)),
        ExprKind::Literal(l) => {
            let text = match l {
                Literal::Int(i) => format!("int:{}", i),
                Literal::Float(f) => format!("float:{:?}", f),
                Literal::Str(s) => {
                    let mut q = String::from("str:");
                    quote_str(s, &mut q);
                    q
                }
                Literal::Bool(b) => format!("bool:{}", b),
                Literal::None => "none".into(),
            };
            SyntaxTree::leaf(format!("E:Lit:{}", text))
        }
        ExprKind::Attribute { value, attr } => {
            SyntaxTree::node(format!("E:Attr:{}", attr), vec![expr(value)])
        }
        ExprKind::Subscript { value, index } => {
            SyntaxTree::node("E:Subscript", vec![expr(value), expr(index)])
        }
        ExprKind::Slice { lower, upper, step } => {
            let bits = format!(
                "{}{}{}",
                lower.is_some() as u8,
                upper.is_some() as u8,
                step.is_some() as u8
            );
            let mut c = boxed(lower);
            c.extend(boxed(upper));
            c.extend(boxed(step));
            SyntaxTree::node(format!("E:Slice:{}", bits), c)
        }
        ExprKind::Call {
            func,
            args,
            keywords,
        } => {
            let mut c = vec![expr(func)];
            c.extend(args.iter().map(expr));
            c.extend(
                keywords
                    .iter()
                    .map(|k| SyntaxTree::node(format!("K:{}", k.name), vec![expr(&k.value)])),
            );
            SyntaxTree::node(format!("E:Call:{}", args.len()), c)
        }
        ExprKind::BinOp { left, op, right } => SyntaxTree::node(
            format!("E:BinOp:{}", op.symbol()),
            vec![expr(left), expr(right)],
        ),
        ExprKind::UnaryOp { op, operand } => {
            SyntaxTree::node(format!("E:Unary:{:?}", op), vec![expr(operand)])
        }
        ExprKind::BoolOp { op, values } => {
            SyntaxTree::node(format!("E:Bool:{:?}", op), values.iter().map(expr).collect())
        }
        ExprKind::Compare {
            left,
            ops,
            comparators,
        } => {
            let label = ops.iter().map(|o| o.symbol()).collect::<Vec<_>>().join(",");
            let mut c = vec![expr(left)];
            c.extend(comparators.iter().map(expr));
            SyntaxTree::node(format!("E:Compare:{}", label), c)
        }
        ExprKind::IfExp { test, body, orelse } => {
            SyntaxTree::node("E:IfExp", vec![expr(body), expr(test), expr(orelse)])
        }
        ExprKind::Lambda { params, body } => {
            let mut c: Vec<_> = params.iter().map(param).collect();
            c.push(expr(body));
            SyntaxTree::node("E:Lambda", c)
        }
        ExprKind::List(items) => SyntaxTree::node("E:List", items.iter().map(expr).collect()),
        ExprKind::Tuple(items) => SyntaxTree::node("E:Tuple", items.iter().map(expr).collect()),
        ExprKind::Dict(pairs) => SyntaxTree::node(
            "E:Dict",
            pairs
                .iter()
                .map(|(k, v)| SyntaxTree::node("Pair", vec![expr(k), expr(v)]))
                .collect(),
        ),
        ExprKind::Comprehension {
            kind,
            elt,
            value,
            generators,
        } => {
            let mut c = vec![expr(elt)];
            c.extend(boxed(value));
            for g in generators {
                let mut gc = vec![expr(&g.target), expr(&g.iter)];
                gc.extend(g.ifs.iter().map(expr));
                c.push(SyntaxTree::node("G", gc));
            }
            SyntaxTree::node(format!("E:Comp:{:?}", kind), c)
        }
    }
}
