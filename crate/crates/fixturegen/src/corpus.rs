//! A synthetic target codebase: rule sites wrapped in small functions, plus
//! near misses the guards must reject.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use morphweave::applier::{plan_file, scan, OverlapPolicy, TypeEnv};
use morphweave::cpat::Cpat;
use morphweave::syntax;
use morphweave::template::{GuardPredicate, RewriteRule};

use crate::defs::Def;

const PER_FILE: usize = 12;

/// Replaces `:[[v]]` holes with fresh names tagged by `tag`.
fn fill(rule: &RewriteRule, tag: &str) -> (String, BTreeMap<String, String>) {
    let text = rule.lhs_text();
    let mut out = String::new();
    let mut names = BTreeMap::new();
    let mut rest = text.as_str();
    while let Some(s) = rest.find(":[[") {
        out.push_str(&rest[..s]);
        let e = rest[s..].find("]]").unwrap() + s;
        let var = &rest[s + 3..e];
        let name = names
            .entry(var.to_string())
            .or_insert_with(|| format!("{}_{}", var.to_lowercase(), tag))
            .clone();
        out.push_str(&name);
        rest = &rest[e + 2..];
    }
    out.push_str(rest);
    (out, names)
}

fn guard_types(rule: &RewriteRule, names: &BTreeMap<String, String>) -> Vec<(String, String)> {
    rule.guards
        .iter()
        .filter_map(|g| match &g.predicate {
            GuardPredicate::TypeIs(t) => Some((names[&g.var].clone(), t.clone())),
            _ => None,
        })
        .collect()
}

fn function(k: usize, body: &str) -> String {
    let mut s = format!("def step_{}(cfg):\n", k);
    for l in body.lines() {
        s.push_str("    ");
        s.push_str(l);
        s.push('\n');
    }
    s.push_str("    return cfg\n");
    s
}

/// True when a lone instance of `rule` is claimed by `rule` itself.
fn self_claimed(rules: &[RewriteRule], rule: &RewriteRule) -> bool {
    let (code, names) = fill(rule, "probe");
    let env: HashMap<String, String> = guard_types(rule, &names).into_iter().collect();
    let ast = syntax::parse_fragment(&function(0, &code)).unwrap();
    let (chosen, _) = plan_file(rules, &ast, &env, OverlapPolicy::FirstRuleWins);
    chosen.len() == 1 && chosen[0].0.rule_id == rule.rule_id
}

pub struct Written {
    pub baseline: usize,
    pub full: usize,
    pub eligible: Vec<String>,
}

pub fn write(def: &Def, cpat: &Cpat, rules: &[RewriteRule], root: &Path) -> Written {
    let src = root.join("src").join(def.id());
    let _ = fs::remove_dir_all(&src);
    fs::create_dir_all(&src).unwrap();
    fs::create_dir_all(root.join("stubs")).unwrap();
    let human = &rules[0];
    let variant_rules: Vec<&RewriteRule> = rules[1..].iter().filter(|r| self_claimed(rules, r)).collect();
    assert!(!variant_rules.is_empty(), "{}: no variant rule claims its own sites", def.id());

    let mut sites: Vec<(&RewriteRule, Option<&str>)> = Vec::new();
    for _ in 0..def.row.t1 {
        sites.push((human, None));
    }
    for k in 0..def.row.t2 - def.row.t1 {
        sites.push((variant_rules[k % variant_rules.len()], None));
    }
    // near misses: wrong declared type, then no type at all
    for k in 0..4 {
        sites.push((human, Some(if k % 2 == 0 { "Set[int]" } else { "" })));
    }
    // interleave so files mix rules
    let mut order: Vec<usize> = (0..sites.len()).collect();
    order.sort_by_key(|&k| (k * 7919) % sites.len().max(1) * sites.len() + k);

    let header: String = cpat.imports.iter().map(|m| format!("import {}\n", m)).collect();
    let mut stubs: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for (f, chunk) in order.chunks(PER_FILE).enumerate() {
        let rel = format!("module_{:03}.py", f);
        let mut text = header.clone();
        let entry = stubs.entry(rel.clone()).or_default();
        for &k in chunk {
            let (rule, bad) = sites[k];
            let (code, names) = fill(rule, &format!("s{}", k));
            for (name, ty) in guard_types(rule, &names) {
                match bad {
                    None => {
                        entry.insert(name, ty);
                    }
                    Some("") => {}
                    Some(wrong) => {
                        entry.insert(name, wrong.to_string());
                    }
                }
            }
            text.push('\n');
            text.push_str(&function(k, &code));
        }
        fs::write(src.join(&rel), text).unwrap();
    }
    stubs.retain(|_, m| !m.is_empty());
    let stub_path = root.join("stubs").join(format!("{}.json", def.id()));
    fs::write(&stub_path, serde_json::to_string_pretty(&stubs).unwrap() + "\n").unwrap();

    let mut env = TypeEnv::from_cpats(std::slice::from_ref(cpat));
    env.load_stubs(&stub_path).unwrap();
    let base = scan(std::slice::from_ref(human), &src, &env, OverlapPolicy::FirstRuleWins).unwrap();
    let full = scan(rules, &src, &env, OverlapPolicy::FirstRuleWins).unwrap();
    Written {
        baseline: base.total(),
        full: full.total(),
        eligible: variant_rules.iter().map(|r| r.rule_id.clone()).collect(),
    }
}
