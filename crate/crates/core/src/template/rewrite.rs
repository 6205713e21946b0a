use std::collections::{HashMap, HashSet};

use super::matcher::{instantiate, Bound, MatchBinding};
use super::{Guard, GuardPredicate, RewriteRule};
use crate::syntax::{self, StmtKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GuardError {
    #[error("no type information for :[[{var}]]")]
    MissingTypeInfo { var: String },
}

/// Whitespace-insensitive type spelling, with builtin generics folded onto
/// their `typing` names so `list[int]` and `List[int]` agree.
pub fn normalize_type(t: &str) -> String {
    let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = String::with_capacity(compact.len());
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        let folded = match word.as_str() {
            "list" => "List",
            "dict" => "Dict",
            "set" => "Set",
            "tuple" => "Tuple",
            w => w,
        };
        out.push_str(folded);
        word.clear();
    };
    for c in compact.chars() {
        if c.is_alphanumeric() || c == '_' || c == '.' {
            word.push(c);
        } else {
            flush(&mut word, &mut out);
            out.push(c);
        }
    }
    flush(&mut word, &mut out);
    out
}

/// True iff every guard holds for the binding. A type guard whose bound
/// expression has no entry in `type_env` is an error: the caller should skip the site.
pub fn check_guards(
    binding: &MatchBinding,
    guards: &[Guard],
    type_env: &HashMap<String, String>,
    imports: &HashSet<String>,
) -> Result<bool, GuardError> {
    let mut ok = true;
    for g in guards {
        match &g.predicate {
            GuardPredicate::TypeIs(want) => {
                let key = match binding.vars.get(&g.var) {
                    Some(Bound::Expr(e)) => syntax::print_expr(e),
                    _ => {
                        return Err(GuardError::MissingTypeInfo { var: g.var.clone() });
                    }
                };
                let have = type_env
                    .get(&key)
                    .ok_or_else(|| GuardError::MissingTypeInfo { var: g.var.clone() })?;
                if normalize_type(have) != normalize_type(want) {
                    ok = false;
                }
            }
            GuardPredicate::ImportedFrom(m) => {
                if !imports.contains(m) {
                    ok = false;
                }
            }
        }
    }
    Ok(ok)
}

fn line_start(src: &str, at: usize) -> usize {
    src[..at].rfind('\n').map(|i| i + 1).unwrap_or(0)
}

/// Replacement text for one site, laid out for the site's column.
pub fn replacement_text(rule: &RewriteRule, binding: &MatchBinding, src: &str) -> String {
    let start = binding.site.start;
    // identity-like rules reuse the matched bytes verbatim
    if let [only] = rule.rhs.body.as_slice() {
        if let StmtKind::Meta(m) = &only.kind {
            if let Some(Bound::Stmt(s)) = binding.vars.get(m) {
                if binding.site.len == 1 && s.span.start == start {
                    return src[s.span.start..s.span.end].to_string();
                }
            }
        }
    }
    let stmts = instantiate(&rule.rhs.body, &binding.vars);
    let text = syntax::print_stmts(&stmts);
    let prefix = &src[line_start(src, start)..start];
    if prefix.chars().all(|c| c == ' ' || c == '\t') {
        let mut out = String::new();
        for (n, line) in text.split('\n').enumerate() {
            if n > 0 {
                out.push('\n');
                if !line.is_empty() {
                    out.push_str(prefix);
                }
            }
            out.push_str(line);
        }
        out
    } else {
        // site sits after a header colon on the same line (`if x: a = 1`)
        let simple = stmts.iter().all(|s| s.bodies().is_empty());
        if simple {
            text.split('\n').collect::<Vec<_>>().join("; ")
        } else {
            text
        }
    }
}

/// Rewrite one site of `src` (the text `binding` was found in).
pub fn rewrite(rule: &RewriteRule, binding: &MatchBinding, src: &str) -> String {
    let mut out = String::with_capacity(src.len());
    out.push_str(&src[..binding.site.start]);
    out.push_str(&replacement_text(rule, binding, src));
    out.push_str(&src[binding.site.end..]);
    out
}

/// Apply several non-overlapping rewrites to one source text.
pub fn rewrite_all(edits: &[(&RewriteRule, &MatchBinding)], src: &str) -> String {
    let mut order: Vec<_> = edits.to_vec();
    order.sort_by_key(|(_, b)| std::cmp::Reverse(b.site.start));
    let mut out = src.to_string();
    for (rule, b) in order {
        let rep = replacement_text(rule, b, src);
        out.replace_range(b.site.start..b.site.end, &rep);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_fragment;
    use crate::template::{find_matches, parse_rule};

    const SUM_LOOP: &str = "result = 0\nfor elem in elements:\n    result = elem + result";
    const SUM_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]";
    const INDEXED_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])";

    fn env(pairs: &[(&str, &str)]) -> HashMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn rewrites_sum_loop() {
        let r = parse_rule(SUM_RULE).unwrap();
        let m = find_matches(&r, &parse_fragment(SUM_LOOP).unwrap());
        assert_eq!(rewrite(&r, &m[0], SUM_LOOP), "result = numpy.sum(elements)");
    }

    #[test]
    fn rewrites_indexed_loop() {
        let r = parse_rule(INDEXED_RULE).unwrap();
        let src = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]";
        let m = find_matches(&r, &parse_fragment(src).unwrap());
        assert_eq!(rewrite(&r, &m[0], src), "loss = numpy.sum(losses)");
    }

    #[test]
    fn identity_preserves_bytes() {
        let r = parse_rule(":[[v0]] => :[[v0]]").unwrap();
        let src = "x=1  # keep\nif  a :\n  y = [ 1,2 ]\n";
        let t = parse_fragment(src).unwrap();
        for m in find_matches(&r, &t) {
            assert_eq!(rewrite(&r, &m, src), src);
        }
    }

    #[test]
    fn nested_site_keeps_surroundings() {
        let r = parse_rule(SUM_RULE).unwrap();
        let src = "def f(xs):\n    s = 0\n    for x in xs:\n        s = x + s  # sum\n    return s\n";
        let m = find_matches(&r, &parse_fragment(src).unwrap());
        let out = rewrite(&r, &m[0], src);
        assert_eq!(out, "def f(xs):\n    s = numpy.sum(xs)  # sum\n    return s\n");
        parse_fragment(&out).unwrap();
    }

    #[test]
    fn guards() {
        let r = parse_rule(SUM_RULE).unwrap();
        let m = &find_matches(&r, &parse_fragment(SUM_LOOP).unwrap())[0];
        let none = HashSet::new();
        assert_eq!(check_guards(m, &r.guards, &env(&[("elements", "List[int]")]), &none), Ok(true));
        assert_eq!(check_guards(m, &r.guards, &env(&[("elements", "list[ int ]")]), &none), Ok(true));
        assert_eq!(check_guards(m, &r.guards, &env(&[("elements", "str")]), &none), Ok(false));
        assert_eq!(
            check_guards(m, &r.guards, &env(&[]), &none),
            Err(GuardError::MissingTypeInfo { var: "v2".into() })
        );
        let imp = vec![Guard {
            var: "v2".into(),
            predicate: GuardPredicate::ImportedFrom("numpy".into()),
        }];
        assert_eq!(check_guards(m, &imp, &env(&[]), &none), Ok(false));
        let with = ["numpy".to_string()].into_iter().collect();
        assert_eq!(check_guards(m, &imp, &env(&[]), &with), Ok(true));
    }
}
