//! Rule inference from a single before/after pair.

mod correspondence;

use std::collections::{BTreeMap, BTreeSet};

use crate::cpat::Cpat;
use crate::syntax::{self, names, Ast, Expr, ExprKind, Literal, ParseError, Stmt, StmtKind};
use crate::template::{Guard, GuardPredicate, RewriteRule, RuleError};

pub use correspondence::{correspond, Correspondence, CorrespondenceError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SynthesisError {
    #[error("fragment does not parse: {0}")]
    Parse(#[from] ParseError),
    #[error("`{0}` is used after the change but never bound before it")]
    UnboundName(String),
    #[error("literal {0} appears after the change but not before it")]
    NewLiteral(String),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// Which names stay concrete during abstraction.
#[derive(Clone, Debug, Default)]
pub struct Policy {
    /// Module names whose attribute uses are never abstracted.
    pub imports: BTreeSet<String>,
    /// Names abstracted even in call-target position.
    pub callable_vars: BTreeSet<String>,
}

#[derive(Clone, Debug)]
pub struct Synthesized {
    pub rule: RewriteRule,
    /// Template variable id to the source name it abstracts.
    pub var_names: BTreeMap<String, String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Load,
    Store,
    CallTarget,
    AttrBase,
}

trait NameMap {
    fn name(&mut self, n: &str, ctx: Ctx) -> Result<ExprKind, SynthesisError>;
}

/// Abstraction of the `before` side: allocates variables in first-occurrence order.
struct Before<'a> {
    policy: &'a Policy,
    vars: Vec<String>,
}

impl Before<'_> {
    fn var(&mut self, n: &str) -> ExprKind {
        let idx = match self.vars.iter().position(|v| v == n) {
            Some(i) => i,
            None => {
                self.vars.push(n.to_string());
                self.vars.len() - 1
            }
        };
        ExprKind::Meta(format!("v{}", idx))
    }
}

impl NameMap for Before<'_> {
    fn name(&mut self, n: &str, ctx: Ctx) -> Result<ExprKind, SynthesisError> {
        let concrete = match ctx {
            Ctx::CallTarget => !self.policy.callable_vars.contains(n),
            Ctx::AttrBase => self.policy.imports.contains(n) || names::is_stdlib_module(n),
            Ctx::Load | Ctx::Store => false,
        };
        Ok(if concrete {
            ExprKind::Name(n.to_string())
        } else {
            self.var(n)
        })
    }
}

/// Substitution on the `after` side using the variables `Before` allocated.
struct After<'a> {
    vars: &'a [String],
    locally_bound: BTreeSet<String>,
}

impl NameMap for After<'_> {
    fn name(&mut self, n: &str, ctx: Ctx) -> Result<ExprKind, SynthesisError> {
        if let Some(i) = self.vars.iter().position(|v| v == n) {
            return Ok(ExprKind::Meta(format!("v{}", i)));
        }
        let concrete = match ctx {
            Ctx::CallTarget | Ctx::AttrBase | Ctx::Store => true,
            Ctx::Load => names::is_builtin(n) || self.locally_bound.contains(n),
        };
        if concrete {
            Ok(ExprKind::Name(n.to_string()))
        } else {
            Err(SynthesisError::UnboundName(n.to_string()))
        }
    }
}

fn map_target(e: &Expr, m: &mut dyn NameMap) -> Result<Expr, SynthesisError> {
    match &e.kind {
        ExprKind::Name(n) => Ok(Expr::new(m.name(n, Ctx::Store)?, e.span)),
        ExprKind::Tuple(items) => Ok(Expr::new(
            ExprKind::Tuple(items.iter().map(|i| map_target(i, m)).collect::<Result<_, _>>()?),
            e.span,
        )),
        ExprKind::List(items) => Ok(Expr::new(
            ExprKind::List(items.iter().map(|i| map_target(i, m)).collect::<Result<_, _>>()?),
            e.span,
        )),
        _ => map_expr(e, Ctx::Load, m),
    }
}

fn map_opt(e: &Option<Expr>, m: &mut dyn NameMap) -> Result<Option<Expr>, SynthesisError> {
    e.as_ref().map(|e| map_expr(e, Ctx::Load, m)).transpose()
}

fn map_box(e: &Option<Box<Expr>>, m: &mut dyn NameMap) -> Result<Option<Box<Expr>>, SynthesisError> {
    e.as_ref()
        .map(|e| map_expr(e, Ctx::Load, m).map(Box::new))
        .transpose()
}

fn map_expr(e: &Expr, ctx: Ctx, m: &mut dyn NameMap) -> Result<Expr, SynthesisError> {
    use ExprKind::*;
    let b = |x: &Expr, c: Ctx, m: &mut dyn NameMap| map_expr(x, c, m).map(Box::new);
    let kind = match &e.kind {
        Name(n) => m.name(n, ctx)?,
        Meta(_) | Literal(_) => e.kind.clone(),
        Attribute { value, attr } => Attribute {
            value: b(value, Ctx::AttrBase, m)?,
            attr: attr.clone(),
        },
        Subscript { value, index } => Subscript {
            value: b(value, Ctx::Load, m)?,
            index: b(index, Ctx::Load, m)?,
        },
        Slice { lower, upper, step } => Slice {
            lower: map_box(lower, m)?,
            upper: map_box(upper, m)?,
            step: map_box(step, m)?,
        },
        Call { func, args, keywords } => {
            let fctx = if matches!(func.kind, Name(_)) {
                Ctx::CallTarget
            } else {
                Ctx::Load
            };
            let func = b(func, fctx, m)?;
            let args = args
                .iter()
                .map(|a| map_expr(a, Ctx::Load, m))
                .collect::<Result<_, _>>()?;
            let mut kws = Vec::new();
            for k in keywords {
                kws.push(syntax::Keyword {
                    name: k.name.clone(),
                    value: map_expr(&k.value, Ctx::Load, m)?,
                });
            }
            Call {
                func,
                args,
                keywords: kws,
            }
        }
        BinOp { left, op, right } => BinOp {
            left: b(left, Ctx::Load, m)?,
            op: *op,
            right: b(right, Ctx::Load, m)?,
        },
        UnaryOp { op, operand } => UnaryOp {
            op: *op,
            operand: b(operand, Ctx::Load, m)?,
        },
        BoolOp { op, values } => BoolOp {
            op: *op,
            values: values
                .iter()
                .map(|v| map_expr(v, Ctx::Load, m))
                .collect::<Result<_, _>>()?,
        },
        Compare { left, ops, comparators } => Compare {
            left: b(left, Ctx::Load, m)?,
            ops: ops.clone(),
            comparators: comparators
                .iter()
                .map(|v| map_expr(v, Ctx::Load, m))
                .collect::<Result<_, _>>()?,
        },
        IfExp { test, body, orelse } => {
            // printed order: body, test, orelse
            let body = b(body, Ctx::Load, m)?;
            let test = b(test, Ctx::Load, m)?;
            IfExp {
                test,
                body,
                orelse: b(orelse, Ctx::Load, m)?,
            }
        }
        Lambda { .. } => e.kind.clone(),
        List(items) => List(
            items
                .iter()
                .map(|v| map_expr(v, Ctx::Load, m))
                .collect::<Result<_, _>>()?,
        ),
        Tuple(items) => Tuple(
            items
                .iter()
                .map(|v| map_expr(v, Ctx::Load, m))
                .collect::<Result<_, _>>()?,
        ),
        Dict(pairs) => {
            let mut out = Vec::new();
            for (k, v) in pairs {
                out.push((map_expr(k, Ctx::Load, m)?, map_expr(v, Ctx::Load, m)?));
            }
            Dict(out)
        }
        Comprehension { kind, elt, value, generators } => {
            let elt = b(elt, Ctx::Load, m)?;
            let value = map_box(value, m)?;
            let mut gens = Vec::new();
            for g in generators {
                gens.push(syntax::CompFor {
                    target: map_target(&g.target, m)?,
                    iter: map_expr(&g.iter, Ctx::Load, m)?,
                    ifs: g
                        .ifs
                        .iter()
                        .map(|c| map_expr(c, Ctx::Load, m))
                        .collect::<Result<_, _>>()?,
                });
            }
            Comprehension {
                kind: *kind,
                elt,
                value,
                generators: gens,
            }
        }
    };
    Ok(Expr::new(kind, e.span))
}

fn map_stmts(stmts: &[Stmt], m: &mut dyn NameMap) -> Result<Vec<Stmt>, SynthesisError> {
    stmts.iter().map(|s| map_stmt(s, m)).collect()
}

fn map_stmt(s: &Stmt, m: &mut dyn NameMap) -> Result<Stmt, SynthesisError> {
    use StmtKind::*;
    let kind = match &s.kind {
        Assign { targets, value } => {
            let targets = targets
                .iter()
                .map(|t| map_target(t, m))
                .collect::<Result<_, _>>()?;
            Assign {
                targets,
                value: map_expr(value, Ctx::Load, m)?,
            }
        }
        AugAssign { target, op, value } => AugAssign {
            target: map_target(target, m)?,
            op: *op,
            value: map_expr(value, Ctx::Load, m)?,
        },
        For { target, iter, body } => {
            let target = map_target(target, m)?;
            For {
                target,
                iter: map_expr(iter, Ctx::Load, m)?,
                body: map_stmts(body, m)?,
            }
        }
        While { test, body } => While {
            test: map_expr(test, Ctx::Load, m)?,
            body: map_stmts(body, m)?,
        },
        If { test, body, orelse } => If {
            test: map_expr(test, Ctx::Load, m)?,
            body: map_stmts(body, m)?,
            orelse: map_stmts(orelse, m)?,
        },
        With { items, body } => {
            let mut out = Vec::new();
            for it in items {
                out.push(syntax::WithItem {
                    context: map_expr(&it.context, Ctx::Load, m)?,
                    alias: it.alias.as_ref().map(|a| map_target(a, m)).transpose()?,
                });
            }
            With {
                items: out,
                body: map_stmts(body, m)?,
            }
        }
        Expr(e) => Expr(map_expr(e, Ctx::Load, m)?),
        Return(v) => Return(map_opt(v, m)?),
        Assert { test, msg } => Assert {
            test: map_expr(test, Ctx::Load, m)?,
            msg: map_opt(msg, m)?,
        },
        // definitions introduce their own scope; leave them concrete
        other => other.clone(),
    };
    Ok(Stmt::new(kind, s.span))
}

fn literals(ast: &Ast) -> Vec<Literal> {
    let mut out = Vec::new();
    ast.walk_exprs(&mut |e| {
        if let ExprKind::Literal(l) = &e.kind {
            out.push(l.clone());
        }
    });
    out
}

fn store_names(ast: &Ast) -> BTreeSet<String> {
    let info = names::analyze(&ast.body);
    let mut out: BTreeSet<String> = info.bound.into_iter().collect();
    // comprehension and lambda bindings are scoped, so collect them separately
    ast.walk_exprs(&mut |e| match &e.kind {
        ExprKind::Comprehension { generators, .. } => {
            for g in generators {
                g.target.walk(&mut |t| {
                    if let ExprKind::Name(n) = &t.kind {
                        out.insert(n.clone());
                    }
                });
            }
        }
        ExprKind::Lambda { params, .. } => {
            out.extend(params.iter().map(|p| p.name.clone()));
        }
        _ => {}
    });
    out
}

pub fn antiunify(before: &Ast, after: &Ast) -> Result<RewriteRule, SynthesisError> {
    antiunify_with(before, after, &Policy::default(), "rule").map(|s| s.rule)
}

/// Abstract a before/after pair into a rewrite rule.
///
/// Variables are numbered in first-occurrence order of `before`. Call targets,
/// module prefixes and literals stay concrete.
pub fn antiunify_with(
    before: &Ast,
    after: &Ast,
    policy: &Policy,
    rule_id: &str,
) -> Result<Synthesized, SynthesisError> {
    let mut b = Before {
        policy,
        vars: Vec::new(),
    };
    let lhs = map_stmts(&before.body, &mut b)?;
    let have = literals(before);
    for l in literals(after) {
        if !have.contains(&l) {
            let e = Expr::new(ExprKind::Literal(l), Default::default());
            return Err(SynthesisError::NewLiteral(syntax::print_expr(&e)));
        }
    }
    let mut a = After {
        vars: &b.vars,
        locally_bound: store_names(after),
    };
    let rhs = map_stmts(&after.body, &mut a)?;
    let rule = RewriteRule::new(rule_id, Ast { body: lhs }, Ast { body: rhs }, Vec::new())?;
    let var_names = b
        .vars
        .iter()
        .enumerate()
        .map(|(i, n)| (format!("v{}", i), n.clone()))
        .collect();
    Ok(Synthesized { rule, var_names })
}

/// Rename the CPAT's variables in `ast` to the variant's names.
fn rename_names(ast: &Ast, map: &BTreeMap<String, String>) -> Ast {
    struct Renamer<'a>(&'a BTreeMap<String, String>);
    impl NameMap for Renamer<'_> {
        fn name(&mut self, n: &str, _ctx: Ctx) -> Result<ExprKind, SynthesisError> {
            Ok(ExprKind::Name(self.0.get(n).cloned().unwrap_or_else(|| n.to_string())))
        }
    }
    Ast {
        body: map_stmts(&ast.body, &mut Renamer(map)).expect("renaming is infallible"),
    }
}

/// Pair a variant LHS with the CPAT's RHS and synthesize a guarded rule.
pub fn synthesize_from_variant(
    variant_lhs: &str,
    cpat: &Cpat,
    llm_types: &BTreeMap<String, String>,
    rule_id: &str,
) -> Result<Synthesized, SynthesisError> {
    let variant = syntax::parse_fragment(variant_lhs)?;
    let rhs = syntax::parse_fragment(&cpat.rhs)?;
    let corr = correspond(&variant, cpat)?;
    let after = rename_names(&rhs, &corr.map);
    let policy = Policy {
        imports: cpat.imports.clone(),
        callable_vars: cpat
            .input_vars
            .iter()
            .filter_map(|v| corr.map.get(&v.name).cloned())
            .collect(),
    };
    let mut syn = antiunify_with(&variant, &after, &policy, rule_id)?;
    let cpat_lhs = syntax::parse_fragment(&cpat.lhs)?;
    let cpat_names = names::analyze(&cpat_lhs.body).all;
    syn.rule.guards = infer_guards(&syn.var_names, &corr, &cpat_names, cpat, llm_types);
    Ok(syn)
}

fn var_index(v: &str) -> u64 {
    v.trim_start_matches(|c: char| !c.is_ascii_digit())
        .parse()
        .unwrap_or(u64::MAX)
}

/// Two-step guard inference. Elements shared with the CPAT inherit the miner's
/// guards verbatim; variant-only elements get a type guard from the LLM's
/// inferred types when one is available.
pub fn infer_guards(
    var_names: &BTreeMap<String, String>,
    corr: &Correspondence,
    cpat_lhs_names: &[String],
    cpat: &Cpat,
    llm_types: &BTreeMap<String, String>,
) -> Vec<Guard> {
    let mut ids: Vec<&String> = var_names.keys().collect();
    ids.sort_by_key(|v| var_index(v));
    let mut out = Vec::new();
    for id in ids {
        let name = &var_names[id];
        let shared = corr
            .cpat_name_of(name)
            .map(str::to_string)
            .or_else(|| cpat_lhs_names.contains(name).then(|| name.clone()));
        match shared {
            Some(c) => {
                for p in cpat.miner_guards.get(&c).into_iter().flatten() {
                    out.push(Guard {
                        var: id.clone(),
                        predicate: p.clone(),
                    });
                }
            }
            None => {
                if let Some(t) = llm_types.get(name) {
                    out.push(Guard {
                        var: id.clone(),
                        predicate: GuardPredicate::TypeIs(t.clone()),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_fragment;
    use crate::template::{find_matches, parse_rule, rewrite};

    const L1: &str = "result = 0\nfor elem in elements:\n    result = elem + result";
    const L1_RHS: &str = "result = numpy.sum(elements)";
    const L2: &str = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]";

    fn cpat1() -> Cpat {
        Cpat::from_json(
            r#"{"id": "cpat-1", "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
            "rhs": "result = numpy.sum(elements)",
            "input_vars": [{"name": "elements", "type": "List[int]"}], "output_vars": ["result"],
            "imports": ["numpy"], "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]}}"#,
            "t",
        )
        .unwrap()
    }

    #[test]
    fn sum_loop_gives_sum_rule() {
        let r = antiunify(&parse_fragment(L1).unwrap(), &parse_fragment(L1_RHS).unwrap()).unwrap();
        assert_eq!(
            r.serialize(),
            ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\n"
        );
    }

    #[test]
    fn indexed_loop_gives_indexed_rule() {
        let r = antiunify(
            &parse_fragment(L2).unwrap(),
            &parse_fragment("loss = numpy.sum(losses)").unwrap(),
        )
        .unwrap();
        let want = parse_rule(":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])").unwrap();
        assert!(r.alpha_eq(&want), "{}", r.serialize());
    }

    #[test]
    fn identity_pair() {
        let a = parse_fragment(L2).unwrap();
        let r = antiunify(&a, &a).unwrap();
        assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn unbound_and_new_literals_fail() {
        let before = parse_fragment(L1).unwrap();
        assert_eq!(
            antiunify(&before, &parse_fragment("result = numpy.sum(other)").unwrap()).unwrap_err(),
            SynthesisError::UnboundName("other".into())
        );
        assert!(matches!(
            antiunify(&before, &parse_fragment("result = numpy.sum(elements) + 1").unwrap()),
            Err(SynthesisError::NewLiteral(_))
        ));
        // fresh output names are fine
        antiunify(&before, &parse_fragment("total = numpy.sum(elements)").unwrap()).unwrap();
    }

    #[test]
    fn alpha_invariance() {
        let r1 = antiunify(&parse_fragment(L1).unwrap(), &parse_fragment(L1_RHS).unwrap()).unwrap();
        let ren = |s: &str| s.replace("result", "acc").replace("elements", "xs").replace("elem", "x");
        let r2 = antiunify(&parse_fragment(&ren(L1)).unwrap(), &parse_fragment(&ren(L1_RHS)).unwrap()).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn variant_synthesis_indexed_loop() {
        let c = cpat1();
        let s = synthesize_from_variant(L2, &c, &BTreeMap::new(), "v").unwrap();
        assert_eq!(
            s.rule.serialize(),
            ":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]\n"
        );
        let types: BTreeMap<String, String> = [("i".to_string(), "int".to_string())].into();
        let s = synthesize_from_variant(L2, &c, &types, "v").unwrap();
        assert_eq!(s.rule.guards.len(), 2);
        assert_eq!(s.rule.guards[0].to_string(), "guard :[[v1]] type int");
    }

    #[test]
    fn self_application_sum_loop() {
        let c = cpat1();
        let s = synthesize_from_variant(L1, &c, &BTreeMap::new(), "h").unwrap();
        let t = parse_fragment(L1).unwrap();
        let m = find_matches(&s.rule, &t);
        assert_eq!(m.len(), 1);
        assert_eq!(rewrite(&s.rule, &m[0], L1), L1_RHS);
    }

    #[test]
    fn infer_guards_empty() {
        let c = cpat1();
        let corr = Correspondence::default();
        let vars: BTreeMap<String, String> = [("v0".to_string(), "zz".to_string())].into();
        assert!(infer_guards(&vars, &corr, &[], &c, &BTreeMap::new()).is_empty());
    }
}
