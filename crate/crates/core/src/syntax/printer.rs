use super::ast::*;
use std::fmt::Write;

const P_LAMBDA: u8 = 0;
const P_IFEXP: u8 = 1;
const P_OR: u8 = 2;
const P_AND: u8 = 3;
const P_NOT: u8 = 4;
const P_CMP: u8 = 5;
const P_UNARY: u8 = 12;
const P_POW: u8 = 13;
const P_ATOM: u8 = 14;

fn binop_prec(op: BinOpKind) -> u8 {
    match op {
        BinOpKind::BitOr => 6,
        BinOpKind::BitXor => 7,
        BinOpKind::BitAnd => 8,
        BinOpKind::LShift | BinOpKind::RShift => 9,
        BinOpKind::Add | BinOpKind::Sub => 10,
        BinOpKind::Mul | BinOpKind::MatMul | BinOpKind::Div | BinOpKind::FloorDiv | BinOpKind::Mod => 11,
        BinOpKind::Pow => P_POW,
    }
}

fn prec(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Lambda { .. } => P_LAMBDA,
        ExprKind::IfExp { .. } => P_IFEXP,
        ExprKind::BoolOp { op: BoolOpKind::Or, .. } => P_OR,
        ExprKind::BoolOp { op: BoolOpKind::And, .. } => P_AND,
        ExprKind::UnaryOp { op: UnaryOpKind::Not, .. } => P_NOT,
        ExprKind::Compare { .. } => P_CMP,
        ExprKind::BinOp { op, .. } => binop_prec(*op),
        ExprKind::UnaryOp { .. } => P_UNARY,
        ExprKind::Literal(Literal::Int(i)) if *i < 0 => P_UNARY,
        ExprKind::Literal(Literal::Float(f)) if f.is_sign_negative() => P_UNARY,
        // bare tuples never appear nested; force parens wherever precedence is asked
        ExprKind::Tuple(_) => P_ATOM,
        _ => P_ATOM,
    }
}

pub fn print_ast(ast: &Ast) -> String {
    let mut out = String::new();
    print_body(&ast.body, 0, &mut out);
    while out.ends_with('\n') {
        out.pop();
    }
    out
}

pub fn print_stmts(stmts: &[Stmt]) -> String {
    let mut out = String::new();
    print_body(stmts, 0, &mut out);
    while out.ends_with('\n') {
        out.pop();
    }
    out
}

pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    expr_bare(e, &mut out);
    out
}

fn print_body(stmts: &[Stmt], indent: usize, out: &mut String) {
    for s in stmts {
        print_stmt(s, indent, out);
    }
}

fn pad(indent: usize, out: &mut String) {
    for _ in 0..indent {
        out.push_str("    ");
    }
}

fn print_block(body: &[Stmt], indent: usize, out: &mut String) {
    out.push_str(":\n");
    if body.is_empty() {
        // not produced by the parser; keeps output valid for hand-built trees
        pad(indent + 1, out);
        out.push_str("pass\n");
    }
    print_body(body, indent + 1, out);
}

pub(crate) fn print_stmt(s: &Stmt, indent: usize, out: &mut String) {
    pad(indent, out);
    match &s.kind {
        StmtKind::Assign { targets, value } => {
            for t in targets {
                expr_bare(t, out);
                out.push_str(" = ");
            }
            expr_bare(value, out);
            out.push('\n');
        }
        StmtKind::AugAssign { target, op, value } => {
            expr_bare(target, out);
            let _ = write!(out, " {}= ", op.symbol());
            expr_bare(value, out);
            out.push('\n');
        }
        StmtKind::For { target, iter, body } => {
            out.push_str("for ");
            target_bare(target, out);
            out.push_str(" in ");
            expr_bare(iter, out);
            print_block(body, indent, out);
        }
        StmtKind::While { test, body } => {
            out.push_str("while ");
            expr(test, P_LAMBDA, out);
            print_block(body, indent, out);
        }
        StmtKind::If { test, body, orelse } => {
            out.push_str("if ");
            expr(test, P_LAMBDA, out);
            print_block(body, indent, out);
            let mut orelse = orelse;
            loop {
                match orelse.as_slice() {
                    [] => break,
                    [
                        Stmt {
                            kind:
                                StmtKind::If {
                                    test,
                                    body,
                                    orelse: next,
                                },
                            ..
                        },
                    ] => {
                        pad(indent, out);
                        out.push_str("elif ");
                        expr(test, P_LAMBDA, out);
                        print_block(body, indent, out);
                        orelse = next;
                    }
                    other => {
                        pad(indent, out);
                        out.push_str("else");
                        print_block(other, indent, out);
                        break;
                    }
                }
            }
        }
        StmtKind::With { items, body } => {
            out.push_str("with ");
            for (n, it) in items.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                expr(&it.context, P_LAMBDA, out);
                if let Some(a) = &it.alias {
                    out.push_str(" as ");
                    expr(a, 6, out);
                }
            }
            print_block(body, indent, out);
        }
        StmtKind::Expr(e) => {
            expr_bare(e, out);
            out.push('\n');
        }
        StmtKind::FunctionDef { name, params, body } => {
            let _ = write!(out, "def {}(", name);
            print_params(params, out);
            out.push(')');
            print_block(body, indent, out);
        }
        StmtKind::ClassDef { name, bases, body } => {
            let _ = write!(out, "class {}", name);
            if !bases.is_empty() {
                out.push('(');
                for (n, b) in bases.iter().enumerate() {
                    if n > 0 {
                        out.push_str(", ");
                    }
                    expr(b, P_LAMBDA, out);
                }
                out.push(')');
            }
            print_block(body, indent, out);
        }
        StmtKind::Return(v) => {
            out.push_str("return");
            if let Some(v) = v {
                out.push(' ');
                expr_bare(v, out);
            }
            out.push('\n');
        }
        StmtKind::Import(names) => {
            out.push_str("import ");
            print_aliases(names, out);
            out.push('\n');
        }
        StmtKind::ImportFrom {
            module,
            level,
            names,
        } => {
            out.push_str("from ");
            for _ in 0..*level {
                out.push('.');
            }
            out.push_str(module);
            out.push_str(" import ");
            print_aliases(names, out);
            out.push('\n');
        }
        StmtKind::Assert { test, msg } => {
            out.push_str("assert ");
            expr(test, P_LAMBDA, out);
            if let Some(m) = msg {
                out.push_str(", ");
                expr(m, P_LAMBDA, out);
            }
            out.push('\n');
        }
        StmtKind::Pass => out.push_str("pass\n"),
        StmtKind::Break => out.push_str("break\n"),
        StmtKind::Continue => out.push_str("continue\n"),
        StmtKind::Meta(m) => {
            let _ = writeln!(out, ":[[{}]]", m);
        }
    }
}

fn print_aliases(names: &[Alias], out: &mut String) {
    for (n, a) in names.iter().enumerate() {
        if n > 0 {
            out.push_str(", ");
        }
        out.push_str(&a.name);
        if let Some(asn) = &a.asname {
            out.push_str(" as ");
            out.push_str(asn);
        }
    }
}

fn print_params(params: &[Param], out: &mut String) {
    for (n, p) in params.iter().enumerate() {
        if n > 0 {
            out.push_str(", ");
        }
        out.push_str(&p.name);
        if let Some(d) = &p.default {
            out.push('=');
            expr(d, P_LAMBDA, out);
        }
    }
}

/// Expression in a context where an unparenthesized tuple is legal.
fn expr_bare(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Tuple(items) if !items.is_empty() => tuple_items(items, P_LAMBDA, out),
        _ => expr(e, P_LAMBDA, out),
    }
}

/// Loop or comprehension target.
fn target_bare(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Tuple(items) if !items.is_empty() => tuple_items(items, 6, out),
        _ => expr(e, 6, out),
    }
}

fn tuple_items(items: &[Expr], min: u8, out: &mut String) {
    for (n, it) in items.iter().enumerate() {
        if n > 0 {
            out.push_str(", ");
        }
        expr(it, min, out);
    }
    if items.len() == 1 {
        out.push(',');
    }
}

fn expr(e: &Expr, min: u8, out: &mut String) {
    let p = prec(e);
    let paren = p < min;
    if paren {
        out.push('(');
    }
    expr_inner(e, out);
    if paren {
        out.push(')');
    }
}

fn expr_inner(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Name(n) => out.push_str(n),
        ExprKind::Meta(m) => {
            let _ = write!(out, ":[[{}]]", m);
        }
        ExprKind::Literal(l) => literal(l, out),
        ExprKind::Attribute { value, attr } => {
            let int_base = matches!(value.kind, ExprKind::Literal(Literal::Int(i)) if i >= 0);
            if int_base {
                out.push('(');
                expr_inner(value, out);
                out.push(')');
            } else {
                expr(value, P_ATOM, out);
            }
            out.push('.');
            out.push_str(attr);
        }
        ExprKind::Subscript { value, index } => {
            expr(value, P_ATOM, out);
            out.push('[');
            match &index.kind {
                ExprKind::Tuple(items) if !items.is_empty() => {
                    for (n, it) in items.iter().enumerate() {
                        if n > 0 {
                            out.push_str(", ");
                        }
                        subscript_item(it, out);
                    }
                    if items.len() == 1 {
                        out.push(',');
                    }
                }
                _ => subscript_item(index, out),
            }
            out.push(']');
        }
        ExprKind::Slice { .. } => {
            // only meaningful inside a subscript; printed the same way elsewhere
            subscript_item(e, out);
        }
        ExprKind::Call {
            func,
            args,
            keywords,
        } => {
            expr(func, P_ATOM, out);
            out.push('(');
            let sole_gen = args.len() == 1
                && keywords.is_empty()
                && matches!(
                    args[0].kind,
                    ExprKind::Comprehension {
                        kind: CompKind::Generator,
                        ..
                    }
                );
            if sole_gen {
                comprehension_inner(&args[0], out);
            } else {
                let mut first = true;
                for a in args {
                    if !first {
                        out.push_str(", ");
                    }
                    first = false;
                    expr(a, P_LAMBDA, out);
                }
                for k in keywords {
                    if !first {
                        out.push_str(", ");
                    }
                    first = false;
                    out.push_str(&k.name);
                    out.push('=');
                    expr(&k.value, P_LAMBDA, out);
                }
            }
            out.push(')');
        }
        ExprKind::BinOp { left, op, right } => {
            let p = binop_prec(*op);
            if *op == BinOpKind::Pow {
                expr(left, P_ATOM, out);
                out.push_str(" ** ");
                expr(right, P_UNARY, out);
            } else {
                expr(left, p, out);
                let _ = write!(out, " {} ", op.symbol());
                expr(right, p + 1, out);
            }
        }
        ExprKind::UnaryOp { op, operand } => match op {
            UnaryOpKind::Not => {
                out.push_str("not ");
                expr(operand, P_NOT, out);
            }
            _ => {
                out.push(match op {
                    UnaryOpKind::Neg => '-',
                    UnaryOpKind::Pos => '+',
                    _ => '~',
                });
                expr(operand, P_UNARY, out);
            }
        },
        ExprKind::BoolOp { op, values } => {
            let (kw, p) = match op {
                BoolOpKind::And => (" and ", P_AND),
                BoolOpKind::Or => (" or ", P_OR),
            };
            for (n, v) in values.iter().enumerate() {
                if n > 0 {
                    out.push_str(kw);
                }
                expr(v, p + 1, out);
            }
        }
        ExprKind::Compare {
            left,
            ops,
            comparators,
        } => {
            expr(left, P_CMP + 1, out);
            for (op, c) in ops.iter().zip(comparators) {
                let _ = write!(out, " {} ", op.symbol());
                expr(c, P_CMP + 1, out);
            }
        }
        ExprKind::IfExp { test, body, orelse } => {
            expr(body, P_OR, out);
            out.push_str(" if ");
            expr(test, P_OR, out);
            out.push_str(" else ");
            expr(orelse, P_LAMBDA, out);
        }
        ExprKind::Lambda { params, body } => {
            out.push_str("lambda");
            if !params.is_empty() {
                out.push(' ');
                print_params(params, out);
            }
            out.push_str(": ");
            expr(body, P_LAMBDA, out);
        }
        ExprKind::List(items) => {
            out.push('[');
            for (n, it) in items.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                expr(it, P_LAMBDA, out);
            }
            out.push(']');
        }
        ExprKind::Tuple(items) => {
            out.push('(');
            tuple_items(items, P_LAMBDA, out);
            out.push(')');
        }
        ExprKind::Dict(pairs) => {
            out.push('{');
            for (n, (k, v)) in pairs.iter().enumerate() {
                if n > 0 {
                    out.push_str(", ");
                }
                expr(k, P_LAMBDA, out);
                out.push_str(": ");
                expr(v, P_LAMBDA, out);
            }
            out.push('}');
        }
        ExprKind::Comprehension { kind, .. } => {
            let (open, close) = match kind {
                CompKind::List => ('[', ']'),
                CompKind::Set | CompKind::Dict => ('{', '}'),
                CompKind::Generator => ('(', ')'),
            };
            out.push(open);
            comprehension_inner(e, out);
            out.push(close);
        }
    }
}

fn comprehension_inner(e: &Expr, out: &mut String) {
    let ExprKind::Comprehension {
        elt,
        value,
        generators,
        ..
    } = &e.kind
    else {
        unreachable!()
    };
    expr(elt, P_LAMBDA, out);
    if let Some(v) = value {
        out.push_str(": ");
        expr(v, P_LAMBDA, out);
    }
    for g in generators {
        out.push_str(" for ");
        target_bare(&g.target, out);
        out.push_str(" in ");
        expr(&g.iter, P_OR, out);
        for c in &g.ifs {
            out.push_str(" if ");
            expr(c, P_OR, out);
        }
    }
}

fn subscript_item(e: &Expr, out: &mut String) {
    if let ExprKind::Slice { lower, upper, step } = &e.kind {
        if let Some(l) = lower {
            expr(l, P_LAMBDA, out);
        }
        out.push(':');
        if let Some(u) = upper {
            expr(u, P_LAMBDA, out);
        }
        if let Some(s) = step {
            out.push(':');
            expr(s, P_LAMBDA, out);
        }
    } else {
        expr(e, P_LAMBDA, out);
    }
}

fn literal(l: &Literal, out: &mut String) {
    match l {
        Literal::Int(i) => {
            let _ = write!(out, "{}", i);
        }
        Literal::Float(f) => {
            if f.is_finite() {
                let s = format!("{:?}", f);
                out.push_str(&s);
            } else if f.is_nan() {
                out.push_str("float(\"nan\")");
            } else if *f > 0.0 {
                out.push_str("float(\"inf\")");
            } else {
                out.push_str("-float(\"inf\")");
            }
        }
        Literal::Str(s) => quote_str(s, out),
        Literal::Bool(true) => out.push_str("True"),
        Literal::Bool(false) => out.push_str("False"),
        Literal::None => out.push_str("None"),
    }
}

pub fn quote_str(s: &str, out: &mut String) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 || c as u32 == 0x7f => {
                let _ = write!(out, "\\x{:02x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
