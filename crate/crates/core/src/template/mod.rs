//! Comby-style rewrite rules over the Python subset.
//!
//! A rule file is a template LHS, a line holding only `=>`, a template RHS and
//! trailing guard lines:
//!
//! ```text
//! :[[v0]] = 0
//! for :[[v1]] in :[[v2]]:
//!     :[[v0]] = :[[v1]] + :[[v0]]
//! =>
//! :[[v0]] = numpy.sum(:[[v2]])
//! guard :[[v2]] type List[int]
//! ```

mod matcher;
mod rewrite;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{self, Ast, Expr, ExprKind, ParseError, Stmt, StmtKind};

pub use matcher::{find_matches, find_matches_in, instantiate, Bound, MatchBinding, MatchSite};
pub use rewrite::{check_guards, normalize_type, rewrite, rewrite_all, GuardError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RuleError {
    #[error("rule parse error: {0}")]
    RuleParse(String),
    #[error("template variable :[[{0}]] appears in the RHS but not in the LHS")]
    UnboundRhsVar(String),
}

impl From<ParseError> for RuleError {
    fn from(e: ParseError) -> Self {
        RuleError::RuleParse(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GuardPredicate {
    #[serde(rename = "type")]
    TypeIs(String),
    #[serde(rename = "import")]
    ImportedFrom(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Guard {
    pub var: String,
    pub predicate: GuardPredicate,
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.predicate {
            GuardPredicate::TypeIs(t) => write!(f, "guard :[[{}]] type {}", self.var, t),
            GuardPredicate::ImportedFrom(m) => write!(f, "guard :[[{}]] import {}", self.var, m),
        }
    }
}

/// Position class of a template variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarSort {
    Expr,
    Stmt,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub rule_id: String,
    pub lhs: Ast,
    pub rhs: Ast,
    pub guards: Vec<Guard>,
}

impl RewriteRule {
    /// Builds a rule from template ASTs, enforcing the rule invariants.
    pub fn new(rule_id: impl Into<String>, lhs: Ast, rhs: Ast, guards: Vec<Guard>) -> Result<Self, RuleError> {
        let rule = RewriteRule {
            rule_id: rule_id.into(),
            lhs,
            rhs,
            guards,
        };
        rule.validate()?;
        Ok(rule)
    }

    fn validate(&self) -> Result<(), RuleError> {
        if self.lhs.body.is_empty() {
            return Err(RuleError::RuleParse("empty LHS".into()));
        }
        let lhs = template_vars(&self.lhs)?;
        let rhs = template_vars(&self.rhs)?;
        for (v, sort) in &rhs {
            match lhs.get(v) {
                None => return Err(RuleError::UnboundRhsVar(v.clone())),
                Some(s) if s != sort => {
                    return Err(RuleError::RuleParse(format!(
                        ":[[{}]] used in both statement and expression position",
                        v
                    )))
                }
                _ => {}
            }
        }
        for g in &self.guards {
            if !lhs.contains_key(&g.var) {
                return Err(RuleError::RuleParse(format!("guard on unknown variable :[[{}]]", g.var)));
            }
        }
        Ok(())
    }

    pub fn lhs_vars(&self) -> BTreeSet<String> {
        template_vars(&self.lhs).map(|m| m.into_keys().collect()).unwrap_or_default()
    }

    pub fn rhs_vars(&self) -> BTreeSet<String> {
        template_vars(&self.rhs).map(|m| m.into_keys().collect()).unwrap_or_default()
    }

    pub fn lhs_text(&self) -> String {
        syntax::print_canonical(&self.lhs)
    }

    pub fn rhs_text(&self) -> String {
        syntax::print_canonical(&self.rhs)
    }

    /// Canonical rule-file text. `parse_rule(r.serialize())` reproduces `r`
    /// and re-serializes to the same bytes.
    pub fn serialize(&self) -> String {
        let mut out = self.lhs_text();
        out.push_str("\n=>\n");
        out.push_str(&self.rhs_text());
        out.push('\n');
        for g in &self.guards {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Structural equality up to a consistent renaming of template variables.
    pub fn alpha_eq(&self, other: &RewriteRule) -> bool {
        let a = self.with_numbered_vars();
        let b = other.with_numbered_vars();
        a.lhs == b.lhs && a.rhs == b.rhs && {
            let mut ga: Vec<_> = a.guards.iter().map(|g| g.to_string()).collect();
            let mut gb: Vec<_> = b.guards.iter().map(|g| g.to_string()).collect();
            ga.sort();
            gb.sort();
            ga == gb
        }
    }

    /// Renames variables to v0, v1, ... in first-occurrence order of the LHS.
    pub fn with_numbered_vars(&self) -> RewriteRule {
        let mut order = Vec::new();
        visit_vars(&self.lhs, &mut |v, _| {
            if !order.iter().any(|o: &String| o == v) {
                order.push(v.to_string());
            }
        });
        let map: BTreeMap<String, String> = order
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), format!("v{}", i)))
            .collect();
        let rename = |s: &str| map.get(s).cloned().unwrap_or_else(|| s.to_string());
        RewriteRule {
            rule_id: self.rule_id.clone(),
            lhs: rename_vars(&self.lhs, &rename),
            rhs: rename_vars(&self.rhs, &rename),
            guards: self
                .guards
                .iter()
                .map(|g| Guard {
                    var: rename(&g.var),
                    predicate: g.predicate.clone(),
                })
                .collect(),
        }
    }
}

pub fn parse_rule(text: &str) -> Result<RewriteRule, RuleError> {
    parse_rule_with_id(text, "rule")
}

pub fn parse_rule_with_id(text: &str, rule_id: &str) -> Result<RewriteRule, RuleError> {
    let text = text.replace("\r\n", "\n");
    let lines: Vec<&str> = text.lines().collect();
    let (lhs_src, rest): (String, Vec<&str>) = match lines.iter().position(|l| l.trim() == "=>") {
        Some(i) => (lines[..i].join("\n"), lines[i + 1..].to_vec()),
        None => {
            // single-line form `LHS => RHS`
            let first = lines
                .iter()
                .position(|l| !l.trim().is_empty())
                .ok_or_else(|| RuleError::RuleParse("empty rule".into()))?;
            let (l, r) = lines[first]
                .split_once("=>")
                .ok_or_else(|| RuleError::RuleParse("missing '=>' separator".into()))?;
            let mut rest = vec![r.trim()];
            rest.extend_from_slice(&lines[first + 1..]);
            (l.trim_end().to_string(), rest)
        }
    };
    let guard_start = rest
        .iter()
        .position(|l| l.trim_start().starts_with("guard "))
        .unwrap_or(rest.len());
    let rhs_src = rest[..guard_start].join("\n");
    let mut guards = Vec::new();
    for line in &rest[guard_start..] {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        guards.push(parse_guard(line)?);
    }
    if lhs_src.trim().is_empty() {
        return Err(RuleError::RuleParse("empty LHS".into()));
    }
    let lhs = syntax::parse_template(&lhs_src)?;
    let rhs = if rhs_src.trim().is_empty() {
        Ast::default()
    } else {
        syntax::parse_template(&rhs_src)?
    };
    RewriteRule::new(rule_id, lhs, rhs, guards)
}

fn parse_guard(line: &str) -> Result<Guard, RuleError> {
    let bad = || RuleError::RuleParse(format!("malformed guard line {:?}", line));
    let rest = line.strip_prefix("guard").ok_or_else(bad)?.trim_start();
    let rest = rest.strip_prefix(":[[").ok_or_else(bad)?;
    let (var, rest) = rest.split_once("]]").ok_or_else(bad)?;
    let rest = rest.trim_start();
    let (kind, value) = rest.split_once(char::is_whitespace).ok_or_else(bad)?;
    let value = value.trim();
    if value.is_empty() || var.is_empty() {
        return Err(bad());
    }
    let predicate = match kind {
        "type" => GuardPredicate::TypeIs(value.to_string()),
        "import" => GuardPredicate::ImportedFrom(value.to_string()),
        _ => return Err(bad()),
    };
    Ok(Guard {
        var: var.to_string(),
        predicate,
    })
}

/// Template variables of a template AST with their position class.
pub fn template_vars(ast: &Ast) -> Result<BTreeMap<String, VarSort>, RuleError> {
    let mut out: BTreeMap<String, VarSort> = BTreeMap::new();
    let mut clash = None;
    visit_vars(ast, &mut |v, sort| match out.get(v) {
        Some(s) if *s != sort => clash = Some(v.to_string()),
        Some(_) => {}
        None => {
            out.insert(v.to_string(), sort);
        }
    });
    match clash {
        Some(v) => Err(RuleError::RuleParse(format!(
            ":[[{}]] used in both statement and expression position",
            v
        ))),
        None => Ok(out),
    }
}

/// Pre-order visit of every metavariable occurrence.
pub fn visit_vars(ast: &Ast, f: &mut dyn FnMut(&str, VarSort)) {
    fn stmt(s: &Stmt, f: &mut dyn FnMut(&str, VarSort)) {
        if let StmtKind::Meta(m) = &s.kind {
            f(m, VarSort::Stmt);
            return;
        }
        // expressions of this statement first, then nested bodies, keeps source order
        // for headers like `for :[[v1]] in :[[v2]]:`
        for e in s.exprs() {
            e.walk(&mut |e| {
                if let ExprKind::Meta(m) = &e.kind {
                    f(m, VarSort::Expr);
                }
            });
        }
        for b in s.bodies() {
            for c in b {
                stmt(c, f);
            }
        }
    }
    for s in &ast.body {
        stmt(s, f);
    }
}

fn rename_vars(ast: &Ast, rename: &dyn Fn(&str) -> String) -> Ast {
    let mut bind = BTreeMap::new();
    let mut names = Vec::new();
    visit_vars(ast, &mut |v, sort| names.push((v.to_string(), sort)));
    for (v, sort) in names {
        let b = match sort {
            VarSort::Expr => Bound::Expr(Expr::new(ExprKind::Meta(rename(&v)), Default::default())),
            VarSort::Stmt => Bound::Stmt(Stmt::new(StmtKind::Meta(rename(&v)), Default::default())),
        };
        bind.insert(v, b);
    }
    Ast {
        body: instantiate(&ast.body, &bind),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const SUM_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]\n";

    #[test]
    fn parses_sum_rule() {
        let r = parse_rule(SUM_RULE).unwrap();
        assert_eq!(
            r.lhs_vars().into_iter().collect::<Vec<_>>(),
            ["v0", "v1", "v2"]
        );
        assert_eq!(r.lhs.body.len(), 2);
        assert_eq!(r.rhs.body.len(), 1);
        assert_eq!(r.guards.len(), 1);
        // three template statements counting the nested one
        let mut n = 0;
        r.lhs.walk_stmts(&mut |_| n += 1);
        assert_eq!(n, 3);
    }

    #[test]
    fn serializer_round_trips_bytes() {
        let r = parse_rule(SUM_RULE).unwrap();
        assert_eq!(r.serialize(), SUM_RULE);
        assert_eq!(parse_rule(&r.serialize()).unwrap(), r);
    }

    #[test]
    fn identity_and_unbound() {
        let r = parse_rule(":[[v0]] => :[[v0]]").unwrap();
        assert_eq!(r.lhs, r.rhs);
        assert_eq!(
            parse_rule(":[[v0]] => :[[v9]]").unwrap_err(),
            RuleError::UnboundRhsVar("v9".into())
        );
    }

    #[test]
    fn bad_rules() {
        assert!(matches!(parse_rule("x = (\n=>\ny"), Err(RuleError::RuleParse(_))));
        assert!(matches!(parse_rule("x = 1"), Err(RuleError::RuleParse(_))));
        assert!(matches!(
            parse_rule("x = :[[v0]]\n=>\ny = 1\nguard :[[v3]] type int"),
            Err(RuleError::RuleParse(_))
        ));
        assert!(matches!(
            parse_rule("x = :[[v0]]\n=>\ny = 1\nguard :[[v0]] colour red"),
            Err(RuleError::RuleParse(_))
        ));
        assert!(matches!(
            parse_rule(":[[v0]]\nx = :[[v0]]\n=>\npass"),
            Err(RuleError::RuleParse(_))
        ));
    }

    #[test]
    fn alpha_equivalence() {
        let a = parse_rule(SUM_RULE).unwrap();
        let b = parse_rule(&SUM_RULE.replace("v0", "q").replace("v2", "v0").replace("q", "v2")).unwrap();
        assert!(a.alpha_eq(&b));
        let c = parse_rule(":[[v0]] = 1\n=>\npass").unwrap();
        assert!(!a.alpha_eq(&c));
    }
}
