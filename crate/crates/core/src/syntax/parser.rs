use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

pub fn parse(src: &str, template: bool) -> Result<Ast, ParseError> {
    let src = src.replace("\r\n", "\n");
    if src.trim().is_empty() {
        return Err(ParseError::Syntax {
            line: 1,
            message: "empty fragment".into(),
        });
    }
    let toks = tokenize(&src, template)?;
    let mut p = Parser { toks, pos: 0 };
    let mut body = Vec::new();
    while !p.at(&Tok::Eof) {
        if p.eat(&Tok::Newline) {
            continue;
        }
        if p.at(&Tok::Indent) {
            return Err(p.error("unexpected indent"));
        }
        body.extend(p.statement()?);
    }
    Ok(Ast { body })
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn unsupported<T>(kind: &str) -> Result<T, ParseError> {
    Err(ParseError::Unsupported {
        kind: kind.to_string(),
    })
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn tok(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn cur(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn at(&self, t: &Tok) -> bool {
        self.tok() == t
    }

    fn at_op(&self, op: &str) -> bool {
        matches!(self.tok(), Tok::Op(o) if *o == op)
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.tok(), Tok::Kw(k) if *k == kw)
    }

    fn peek_is_op(&self, off: usize, op: &str) -> bool {
        matches!(self.toks.get(self.pos + off).map(|t| &t.tok), Some(Tok::Op(o)) if *o == op)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if self.at_op(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if self.at_kw(kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, msg: &str) -> ParseError {
        let t = self.cur();
        let found = match &t.tok {
            Tok::Newline => "newline".to_string(),
            Tok::Indent => "indent".to_string(),
            Tok::Dedent => "dedent".to_string(),
            Tok::Eof => "end of input".to_string(),
            Tok::Name(n) => format!("name '{}'", n),
            Tok::Kw(k) | Tok::Op(k) => format!("'{}'", k),
            Tok::Int(i) => i.to_string(),
            Tok::Float(f) => f.to_string(),
            Tok::Str(_) => "string".to_string(),
            Tok::Meta(m) => format!(":[[{}]]", m),
        };
        ParseError::Syntax {
            line: t.line,
            message: format!("{} (found {})", msg, found),
        }
    }

    fn expect_op(&mut self, op: &str) -> PResult<()> {
        if self.eat_op(op) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", op)))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", kw)))
        }
    }

    fn expect_name(&mut self) -> PResult<String> {
        if let Tok::Name(n) = self.tok() {
            let n = n.clone();
            self.pos += 1;
            Ok(n)
        } else {
            Err(self.error("expected identifier"))
        }
    }

    fn start(&self) -> Span {
        let t = self.cur();
        Span::new(t.start, t.end, t.line)
    }

    /// Span from `start` to the end of the last consumed real token
    /// (layout tokens excluded, so block statements end on their last character).
    fn span_from(&self, start: Span) -> Span {
        let end = self.toks[..self.pos]
            .iter()
            .rev()
            .find(|t| !matches!(t.tok, Tok::Newline | Tok::Indent | Tok::Dedent))
            .map(|t| t.end)
            .unwrap_or(start.end);
        Span::new(start.start, end.max(start.start), start.line)
    }

    // ---- statements ----

    fn statement(&mut self) -> PResult<Vec<Stmt>> {
        let start = self.start();
        let compound = match self.tok() {
            Tok::Kw("if") => Some(self.if_stmt()?),
            Tok::Kw("for") => Some(self.for_stmt()?),
            Tok::Kw("while") => Some(self.while_stmt()?),
            Tok::Kw("with") => Some(self.with_stmt()?),
            Tok::Kw("def") => Some(self.def_stmt()?),
            Tok::Kw("class") => Some(self.class_stmt()?),
            Tok::Kw("try") => return unsupported("try statement"),
            Tok::Kw("async") => return unsupported("async"),
            Tok::Op("@") => return unsupported("decorator"),
            _ => None,
        };
        if let Some(kind) = compound {
            return Ok(vec![Stmt::new(kind, self.span_from(start))]);
        }
        self.simple_line()
    }

    /// One or more `;`-separated simple statements closed by a newline.
    fn simple_line(&mut self) -> PResult<Vec<Stmt>> {
        let mut out = Vec::new();
        loop {
            let start = self.start();
            let kind = self.simple_stmt()?;
            out.push(Stmt::new(kind, self.span_from(start)));
            if self.eat_op(";") {
                if self.at(&Tok::Newline) {
                    break;
                }
                continue;
            }
            break;
        }
        if !self.eat(&Tok::Newline) {
            return Err(self.error("expected end of statement"));
        }
        Ok(out)
    }

    fn simple_stmt(&mut self) -> PResult<StmtKind> {
        match self.tok().clone() {
            Tok::Kw("pass") => {
                self.pos += 1;
                Ok(StmtKind::Pass)
            }
            Tok::Kw("break") => {
                self.pos += 1;
                Ok(StmtKind::Break)
            }
            Tok::Kw("continue") => {
                self.pos += 1;
                Ok(StmtKind::Continue)
            }
            Tok::Kw("return") => {
                self.pos += 1;
                if self.at(&Tok::Newline) || self.at_op(";") {
                    Ok(StmtKind::Return(None))
                } else {
                    Ok(StmtKind::Return(Some(self.testlist()?)))
                }
            }
            Tok::Kw("import") => {
                self.pos += 1;
                let mut names = Vec::new();
                loop {
                    let name = self.dotted_name()?;
                    let asname = if self.eat_kw("as") {
                        Some(self.expect_name()?)
                    } else {
                        None
                    };
                    names.push(Alias { name, asname });
                    if !self.eat_op(",") {
                        break;
                    }
                }
                Ok(StmtKind::Import(names))
            }
            Tok::Kw("from") => {
                self.pos += 1;
                let mut level = 0;
                loop {
                    if self.eat_op(".") {
                        level += 1;
                    } else if self.eat_op("...") {
                        level += 3;
                    } else {
                        break;
                    }
                }
                let module = if self.at_kw("import") {
                    String::new()
                } else {
                    self.dotted_name()?
                };
                if level == 0 && module.is_empty() {
                    return Err(self.error("expected module name"));
                }
                self.expect_kw("import")?;
                if self.at_op("*") {
                    return unsupported("star import");
                }
                let paren = self.eat_op("(");
                let mut names = Vec::new();
                loop {
                    let name = self.expect_name()?;
                    let asname = if self.eat_kw("as") {
                        Some(self.expect_name()?)
                    } else {
                        None
                    };
                    names.push(Alias { name, asname });
                    if !self.eat_op(",") {
                        break;
                    }
                    if paren && self.at_op(")") {
                        break;
                    }
                }
                if paren {
                    self.expect_op(")")?;
                }
                Ok(StmtKind::ImportFrom {
                    module,
                    level,
                    names,
                })
            }
            Tok::Kw("assert") => {
                self.pos += 1;
                let test = self.test()?;
                let msg = if self.eat_op(",") {
                    Some(self.test()?)
                } else {
                    None
                };
                Ok(StmtKind::Assert { test, msg })
            }
            Tok::Kw(k @ ("global" | "nonlocal" | "del" | "raise" | "yield" | "await")) => {
                unsupported(&format!("{} statement", k))
            }
            Tok::Meta(name)
                if matches!(
                    self.toks.get(self.pos + 1).map(|t| &t.tok),
                    Some(Tok::Newline) | Some(Tok::Op(";"))
                ) =>
            {
                self.pos += 1;
                Ok(StmtKind::Meta(name))
            }
            _ => self.expr_stmt(),
        }
    }

    fn dotted_name(&mut self) -> PResult<String> {
        let mut name = self.expect_name()?;
        while self.eat_op(".") {
            name.push('.');
            name.push_str(&self.expect_name()?);
        }
        Ok(name)
    }

    fn expr_stmt(&mut self) -> PResult<StmtKind> {
        let first = self.testlist()?;
        if let Tok::Op(op) = self.tok().clone() {
            if op.len() >= 2 && op.ends_with('=') && !matches!(op, "==" | "<=" | ">=" | "!=") {
                if op == ":=" {
                    return unsupported("assignment expression");
                }
                let bop = BinOpKind::from_symbol(&op[..op.len() - 1])
                    .ok_or_else(|| self.error("bad augmented assignment"))?;
                self.pos += 1;
                check_target(&first, true)?;
                let value = self.testlist()?;
                return Ok(StmtKind::AugAssign {
                    target: first,
                    op: bop,
                    value,
                });
            }
            if op == ":" {
                return unsupported("annotated assignment");
            }
            if op == "=" {
                let mut targets = vec![first];
                let mut value;
                loop {
                    self.pos += 1;
                    value = self.testlist()?;
                    if self.at_op("=") {
                        targets.push(value);
                    } else {
                        break;
                    }
                }
                for t in &targets {
                    check_target(t, false)?;
                }
                return Ok(StmtKind::Assign { targets, value });
            }
        }
        Ok(StmtKind::Expr(first))
    }

    /// Block after a compound-statement header colon.
    fn block(&mut self) -> PResult<Vec<Stmt>> {
        self.expect_op(":")?;
        if self.eat(&Tok::Newline) {
            if !self.eat(&Tok::Indent) {
                return Err(self.error("expected an indented block"));
            }
            let mut body = Vec::new();
            while !self.eat(&Tok::Dedent) {
                if self.at(&Tok::Eof) {
                    break;
                }
                if self.eat(&Tok::Newline) {
                    continue;
                }
                body.extend(self.statement()?);
            }
            Ok(body)
        } else {
            self.simple_line()
        }
    }

    fn if_stmt(&mut self) -> PResult<StmtKind> {
        // called at `if` or `elif`
        self.pos += 1;
        let test = self.named_test()?;
        let body = self.block()?;
        let orelse = if self.at_kw("elif") {
            let start = self.start();
            let kind = self.if_stmt()?;
            vec![Stmt::new(kind, self.span_from(start))]
        } else if self.eat_kw("else") {
            self.block()?
        } else {
            Vec::new()
        };
        Ok(StmtKind::If { test, body, orelse })
    }

    fn for_stmt(&mut self) -> PResult<StmtKind> {
        self.pos += 1;
        let target = self.target_list()?;
        self.expect_kw("in")?;
        let iter = self.testlist()?;
        let body = self.block()?;
        if self.at_kw("else") {
            return unsupported("for-else");
        }
        Ok(StmtKind::For { target, iter, body })
    }

    fn while_stmt(&mut self) -> PResult<StmtKind> {
        self.pos += 1;
        let test = self.named_test()?;
        let body = self.block()?;
        if self.at_kw("else") {
            return unsupported("while-else");
        }
        Ok(StmtKind::While { test, body })
    }

    fn with_stmt(&mut self) -> PResult<StmtKind> {
        self.pos += 1;
        let mut items = Vec::new();
        loop {
            let context = self.test()?;
            let alias = if self.eat_kw("as") {
                let t = self.or_expr()?;
                check_target(&t, false)?;
                Some(t)
            } else {
                None
            };
            items.push(WithItem { context, alias });
            if !self.eat_op(",") {
                break;
            }
        }
        let body = self.block()?;
        Ok(StmtKind::With { items, body })
    }

    fn def_stmt(&mut self) -> PResult<StmtKind> {
        self.pos += 1;
        let name = self.expect_name()?;
        self.expect_op("(")?;
        let params = self.params(")")?;
        self.expect_op(")")?;
        if self.at_op("->") {
            return unsupported("return annotation");
        }
        let body = self.block()?;
        Ok(StmtKind::FunctionDef { name, params, body })
    }

    fn params(&mut self, close: &str) -> PResult<Vec<Param>> {
        let mut params: Vec<Param> = Vec::new();
        while !self.at_op(close) {
            if self.at_op("*") || self.at_op("**") || self.at_op("/") {
                return unsupported("variadic or positional-only parameters");
            }
            let start = self.start();
            let name = self.expect_name()?;
            if self.at_op(":") && close == ")" {
                return unsupported("parameter annotation");
            }
            let default = if self.eat_op("=") {
                Some(self.test()?)
            } else {
                None
            };
            if default.is_none() && params.iter().any(|p| p.default.is_some()) {
                return Err(self.error("non-default argument follows default argument"));
            }
            if params.iter().any(|p| p.name == name) {
                return Err(self.error("duplicate argument in function definition"));
            }
            params.push(Param {
                name,
                default,
                span: self.span_from(start),
            });
            if !self.eat_op(",") {
                break;
            }
        }
        Ok(params)
    }

    fn class_stmt(&mut self) -> PResult<StmtKind> {
        self.pos += 1;
        let name = self.expect_name()?;
        let mut bases = Vec::new();
        if self.eat_op("(") {
            while !self.at_op(")") {
                bases.push(self.test()?);
                if self.at_op("=") {
                    return unsupported("class keyword arguments");
                }
                if !self.eat_op(",") {
                    break;
                }
            }
            self.expect_op(")")?;
        }
        let body = self.block()?;
        Ok(StmtKind::ClassDef { name, bases, body })
    }

    // ---- expressions ----

    fn named_test(&mut self) -> PResult<Expr> {
        let e = self.test()?;
        if self.at_op(":=") {
            return unsupported("assignment expression");
        }
        Ok(e)
    }

    /// Comma-separated tests; more than one (or a trailing comma) forms a tuple.
    fn testlist(&mut self) -> PResult<Expr> {
        let start = self.start();
        let first = self.test()?;
        if !self.at_op(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat_op(",") {
            if self.at_stop() {
                break;
            }
            items.push(self.test()?);
        }
        Ok(Expr::new(ExprKind::Tuple(items), self.span_from(start)))
    }

    fn at_stop(&self) -> bool {
        matches!(
            self.tok(),
            Tok::Newline | Tok::Eof | Tok::Op("=" | ")" | "]" | "}" | ";" | ":")
        ) || matches!(self.tok(), Tok::Op(o) if o.len() >= 2 && o.ends_with('=') && !matches!(*o, "==" | "<=" | ">=" | "!="))
            || self.at_kw("in")
    }

    /// Loop and comprehension targets: bitwise-or level expressions.
    fn target_list(&mut self) -> PResult<Expr> {
        let start = self.start();
        let first = self.or_expr()?;
        let t = if self.at_op(",") {
            let mut items = vec![first];
            while self.eat_op(",") {
                if self.at_kw("in") {
                    break;
                }
                items.push(self.or_expr()?);
            }
            Expr::new(ExprKind::Tuple(items), self.span_from(start))
        } else {
            first
        };
        check_target(&t, false)?;
        Ok(t)
    }

    fn test(&mut self) -> PResult<Expr> {
        if self.at_kw("lambda") {
            return self.lambda();
        }
        if self.at_kw("yield") {
            return unsupported("yield expression");
        }
        let start = self.start();
        let body = self.or_test()?;
        if self.eat_kw("if") {
            let test = self.or_test()?;
            self.expect_kw("else")?;
            let orelse = self.test()?;
            return Ok(Expr::new(
                ExprKind::IfExp {
                    test: Box::new(test),
                    body: Box::new(body),
                    orelse: Box::new(orelse),
                },
                self.span_from(start),
            ));
        }
        Ok(body)
    }

    fn lambda(&mut self) -> PResult<Expr> {
        let start = self.start();
        self.pos += 1;
        let params = self.params(":")?;
        self.expect_op(":")?;
        let body = self.test()?;
        Ok(Expr::new(
            ExprKind::Lambda {
                params,
                body: Box::new(body),
            },
            self.span_from(start),
        ))
    }

    fn or_test(&mut self) -> PResult<Expr> {
        self.bool_chain(BoolOpKind::Or)
    }

    fn bool_chain(&mut self, op: BoolOpKind) -> PResult<Expr> {
        let start = self.start();
        let (kw, next): (&str, fn(&mut Self) -> PResult<Expr>) = match op {
            BoolOpKind::Or => ("or", |p| p.bool_chain(BoolOpKind::And)),
            BoolOpKind::And => ("and", Self::not_test),
        };
        let first = next(self)?;
        if !self.at_kw(kw) {
            return Ok(first);
        }
        let mut values = vec![first];
        while self.eat_kw(kw) {
            values.push(next(self)?);
        }
        Ok(Expr::new(
            ExprKind::BoolOp { op, values },
            self.span_from(start),
        ))
    }

    fn not_test(&mut self) -> PResult<Expr> {
        let start = self.start();
        if self.eat_kw("not") {
            let operand = self.not_test()?;
            return Ok(Expr::new(
                ExprKind::UnaryOp {
                    op: UnaryOpKind::Not,
                    operand: Box::new(operand),
                },
                self.span_from(start),
            ));
        }
        self.comparison()
    }

    fn comp_op(&mut self) -> Option<CmpOp> {
        let op = match self.tok() {
            Tok::Op("==") => CmpOp::Eq,
            Tok::Op("!=") => CmpOp::NotEq,
            Tok::Op("<") => CmpOp::Lt,
            Tok::Op("<=") => CmpOp::LtE,
            Tok::Op(">") => CmpOp::Gt,
            Tok::Op(">=") => CmpOp::GtE,
            Tok::Kw("in") => CmpOp::In,
            Tok::Kw("not")
                if matches!(self.toks.get(self.pos + 1).map(|t| &t.tok), Some(Tok::Kw("in"))) =>
            {
                self.pos += 1;
                CmpOp::NotIn
            }
            Tok::Kw("is") => {
                if matches!(self.toks.get(self.pos + 1).map(|t| &t.tok), Some(Tok::Kw("not"))) {
                    self.pos += 1;
                    CmpOp::IsNot
                } else {
                    CmpOp::Is
                }
            }
            _ => return None,
        };
        self.pos += 1;
        Some(op)
    }

    fn comparison(&mut self) -> PResult<Expr> {
        let start = self.start();
        let left = self.or_expr()?;
        let mut ops = Vec::new();
        let mut comparators = Vec::new();
        while let Some(op) = self.comp_op() {
            ops.push(op);
            comparators.push(self.or_expr()?);
        }
        if ops.is_empty() {
            return Ok(left);
        }
        Ok(Expr::new(
            ExprKind::Compare {
                left: Box::new(left),
                ops,
                comparators,
            },
            self.span_from(start),
        ))
    }

    fn binary_level(&mut self, level: usize) -> PResult<Expr> {
        const LEVELS: &[&[&str]] = &[
            &["|"],
            &["^"],
            &["&"],
            &["<<", ">>"],
            &["+", "-"],
            &["*", "@", "/", "//", "%"],
        ];
        if level == LEVELS.len() {
            return self.unary();
        }
        let start = self.start();
        let mut left = self.binary_level(level + 1)?;
        loop {
            let Tok::Op(op) = self.tok() else { break };
            if !LEVELS[level].contains(op) {
                break;
            }
            let op = BinOpKind::from_symbol(op).unwrap();
            self.pos += 1;
            let right = self.binary_level(level + 1)?;
            left = Expr::new(
                ExprKind::BinOp {
                    left: Box::new(left),
                    op,
                    right: Box::new(right),
                },
                self.span_from(start),
            );
        }
        Ok(left)
    }

    fn or_expr(&mut self) -> PResult<Expr> {
        if self.at_op("*") {
            return unsupported("starred expression");
        }
        self.binary_level(0)
    }

    fn unary(&mut self) -> PResult<Expr> {
        let start = self.start();
        let op = match self.tok() {
            Tok::Op("-") => Some(UnaryOpKind::Neg),
            Tok::Op("+") => Some(UnaryOpKind::Pos),
            Tok::Op("~") => Some(UnaryOpKind::Invert),
            _ => None,
        };
        if let Some(op) = op {
            self.pos += 1;
            let operand = self.unary()?;
            return Ok(Expr::new(
                ExprKind::UnaryOp {
                    op,
                    operand: Box::new(operand),
                },
                self.span_from(start),
            ));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let start = self.start();
        if self.at_kw("await") {
            return unsupported("await");
        }
        let base = self.primary()?;
        if self.eat_op("**") {
            let exp = self.unary()?;
            return Ok(Expr::new(
                ExprKind::BinOp {
                    left: Box::new(base),
                    op: BinOpKind::Pow,
                    right: Box::new(exp),
                },
                self.span_from(start),
            ));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let start = self.start();
        let mut e = self.atom()?;
        loop {
            if self.eat_op(".") {
                let attr = self.expect_name()?;
                e = Expr::new(
                    ExprKind::Attribute {
                        value: Box::new(e),
                        attr,
                    },
                    self.span_from(start),
                );
            } else if self.eat_op("(") {
                let (args, keywords) = self.call_args()?;
                self.expect_op(")")?;
                e = Expr::new(
                    ExprKind::Call {
                        func: Box::new(e),
                        args,
                        keywords,
                    },
                    self.span_from(start),
                );
            } else if self.eat_op("[") {
                let index = self.subscript_list()?;
                self.expect_op("]")?;
                e = Expr::new(
                    ExprKind::Subscript {
                        value: Box::new(e),
                        index: Box::new(index),
                    },
                    self.span_from(start),
                );
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn call_args(&mut self) -> PResult<(Vec<Expr>, Vec<Keyword>)> {
        let mut args = Vec::new();
        let mut keywords: Vec<Keyword> = Vec::new();
        while !self.at_op(")") {
            if self.at_op("*") || self.at_op("**") {
                return unsupported("star arguments");
            }
            if matches!(self.tok(), Tok::Name(_)) && self.peek_is_op(1, "=") {
                let name = self.expect_name()?;
                self.pos += 1;
                let value = self.test()?;
                if keywords.iter().any(|k| k.name == name) {
                    return Err(self.error("keyword argument repeated"));
                }
                keywords.push(Keyword { name, value });
            } else {
                if !keywords.is_empty() {
                    return Err(self.error("positional argument follows keyword argument"));
                }
                let start = self.start();
                let e = self.named_test()?;
                if self.at_kw("for") {
                    let generators = self.comp_fors()?;
                    let g = Expr::new(
                        ExprKind::Comprehension {
                            kind: CompKind::Generator,
                            elt: Box::new(e),
                            value: None,
                            generators,
                        },
                        self.span_from(start),
                    );
                    if !args.is_empty() || !self.at_op(")") {
                        return Err(self.error("generator expression must be parenthesized"));
                    }
                    args.push(g);
                    break;
                }
                args.push(e);
            }
            if !self.eat_op(",") {
                break;
            }
        }
        Ok((args, keywords))
    }

    fn subscript_list(&mut self) -> PResult<Expr> {
        let start = self.start();
        let first = self.subscript()?;
        if !self.at_op(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat_op(",") {
            if self.at_op("]") {
                break;
            }
            items.push(self.subscript()?);
        }
        Ok(Expr::new(ExprKind::Tuple(items), self.span_from(start)))
    }

    fn subscript(&mut self) -> PResult<Expr> {
        let start = self.start();
        let lower = if self.at_op(":") {
            None
        } else {
            let e = self.test()?;
            if !self.at_op(":") {
                return Ok(e);
            }
            Some(Box::new(e))
        };
        self.expect_op(":")?;
        let slice_end = |p: &Self| p.at_op(":") || p.at_op("]") || p.at_op(",");
        let upper = if slice_end(self) {
            None
        } else {
            Some(Box::new(self.test()?))
        };
        let step = if self.eat_op(":") {
            if slice_end(self) {
                None
            } else {
                Some(Box::new(self.test()?))
            }
        } else {
            None
        };
        Ok(Expr::new(
            ExprKind::Slice { lower, upper, step },
            self.span_from(start),
        ))
    }

    fn comp_fors(&mut self) -> PResult<Vec<CompFor>> {
        let mut gens = Vec::new();
        while self.at_kw("for") {
            self.pos += 1;
            let target = self.target_list()?;
            self.expect_kw("in")?;
            let iter = self.or_test()?;
            let mut ifs = Vec::new();
            while self.eat_kw("if") {
                ifs.push(self.or_test()?);
            }
            gens.push(CompFor { target, iter, ifs });
        }
        if self.at_kw("async") {
            return unsupported("async comprehension");
        }
        Ok(gens)
    }

    fn atom(&mut self) -> PResult<Expr> {
        let start = self.start();
        let tok = self.tok().clone();
        let kind = match tok {
            Tok::Name(n) => {
                self.pos += 1;
                ExprKind::Name(n)
            }
            Tok::Meta(m) => {
                self.pos += 1;
                ExprKind::Meta(m)
            }
            Tok::Int(i) => {
                self.pos += 1;
                ExprKind::Literal(Literal::Int(i))
            }
            Tok::Float(f) => {
                self.pos += 1;
                ExprKind::Literal(Literal::Float(f))
            }
            Tok::Str(s) => {
                self.pos += 1;
                let mut s = s;
                while let Tok::Str(more) = self.tok() {
                    s.push_str(more);
                    self.pos += 1;
                }
                ExprKind::Literal(Literal::Str(s))
            }
            Tok::Kw("True") => {
                self.pos += 1;
                ExprKind::Literal(Literal::Bool(true))
            }
            Tok::Kw("False") => {
                self.pos += 1;
                ExprKind::Literal(Literal::Bool(false))
            }
            Tok::Kw("None") => {
                self.pos += 1;
                ExprKind::Literal(Literal::None)
            }
            Tok::Op("...") => return unsupported("ellipsis"),
            Tok::Op("(") => {
                self.pos += 1;
                if self.eat_op(")") {
                    ExprKind::Tuple(Vec::new())
                } else {
                    if self.at_kw("yield") {
                        return unsupported("yield expression");
                    }
                    let first = self.named_test()?;
                    if self.at_kw("for") {
                        let generators = self.comp_fors()?;
                        self.expect_op(")")?;
                        ExprKind::Comprehension {
                            kind: CompKind::Generator,
                            elt: Box::new(first),
                            value: None,
                            generators,
                        }
                    } else if self.eat_op(")") {
                        // parenthesized expression keeps the inner node, span widened
                        let mut e = first;
                        e.span = self.span_from(start);
                        return Ok(e);
                    } else {
                        let mut items = vec![first];
                        while self.eat_op(",") {
                            if self.at_op(")") {
                                break;
                            }
                            items.push(self.test()?);
                        }
                        self.expect_op(")")?;
                        ExprKind::Tuple(items)
                    }
                }
            }
            Tok::Op("[") => {
                self.pos += 1;
                if self.eat_op("]") {
                    ExprKind::List(Vec::new())
                } else {
                    let first = self.named_test()?;
                    if self.at_kw("for") {
                        let generators = self.comp_fors()?;
                        self.expect_op("]")?;
                        ExprKind::Comprehension {
                            kind: CompKind::List,
                            elt: Box::new(first),
                            value: None,
                            generators,
                        }
                    } else {
                        let mut items = vec![first];
                        while self.eat_op(",") {
                            if self.at_op("]") {
                                break;
                            }
                            items.push(self.test()?);
                        }
                        self.expect_op("]")?;
                        ExprKind::List(items)
                    }
                }
            }
            Tok::Op("{") => {
                self.pos += 1;
                if self.eat_op("}") {
                    ExprKind::Dict(Vec::new())
                } else {
                    if self.at_op("**") {
                        return unsupported("dict unpacking");
                    }
                    let k = self.test()?;
                    if !self.eat_op(":") {
                        if self.at_kw("for") {
                            let generators = self.comp_fors()?;
                            self.expect_op("}")?;
                            return Ok(Expr::new(
                                ExprKind::Comprehension {
                                    kind: CompKind::Set,
                                    elt: Box::new(k),
                                    value: None,
                                    generators,
                                },
                                self.span_from(start),
                            ));
                        }
                        return unsupported("set literal");
                    }
                    let v = self.test()?;
                    if self.at_kw("for") {
                        let generators = self.comp_fors()?;
                        self.expect_op("}")?;
                        ExprKind::Comprehension {
                            kind: CompKind::Dict,
                            elt: Box::new(k),
                            value: Some(Box::new(v)),
                            generators,
                        }
                    } else {
                        let mut pairs = vec![(k, v)];
                        while self.eat_op(",") {
                            if self.at_op("}") {
                                break;
                            }
                            let k = self.test()?;
                            self.expect_op(":")?;
                            let v = self.test()?;
                            pairs.push((k, v));
                        }
                        self.expect_op("}")?;
                        ExprKind::Dict(pairs)
                    }
                }
            }
            Tok::Kw(k @ ("await" | "async")) => return unsupported(k),
            _ => return Err(self.error("expected expression")),
        };
        Ok(Expr::new(kind, self.span_from(start)))
    }
}

fn check_target(e: &Expr, aug: bool) -> PResult<()> {
    let ok = match &e.kind {
        ExprKind::Name(_) | ExprKind::Attribute { .. } | ExprKind::Subscript { .. } | ExprKind::Meta(_) => {
            true
        }
        ExprKind::Tuple(items) | ExprKind::List(items) if !aug => {
            for it in items {
                check_target(it, false)?;
            }
            true
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(ParseError::Syntax {
            line: e.span.line,
            message: "cannot assign to expression".into(),
        })
    }
}
