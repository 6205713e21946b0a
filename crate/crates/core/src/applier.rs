//! Applies a rule set to a source tree and produces unified-diff patches.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cpat::{natural_key, Cpat};
use crate::interp::ALLOWED_MODULES;
use crate::syntax::{self, names, Ast, ExprKind, StmtKind};
use crate::template::{check_guards, find_matches, parse_rule_with_id, rewrite, rewrite_all, MatchBinding, RewriteRule, RuleError};

#[derive(Debug, thiserror::Error)]
pub enum ApplyError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("rule file {path}: {source}")]
    Rule {
        path: String,
        #[source]
        source: RuleError,
    },
    #[error("type stub file {path}: {message}")]
    Stubs { path: String, message: String },
    #[error("no rule files in {0}")]
    NoRules(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ApplyError + '_ {
    move |source| ApplyError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Loads `*.rule` files in file-name order; the rule id is the file stem.
pub fn load_rule_dir(dir: &Path) -> Result<Vec<RewriteRule>, ApplyError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io_err(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "rule"))
        .collect();
    paths.sort_by_key(|p| natural_key(&p.file_name().unwrap().to_string_lossy()));
    let mut rules = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(io_err(&p))?;
        let id = p.file_stem().unwrap().to_string_lossy().to_string();
        rules.push(parse_rule_with_id(&text, &id).map_err(|source| ApplyError::Rule {
            path: p.display().to_string(),
            source,
        })?);
    }
    Ok(rules)
}

/// Guard type information: names declared by CPATs, overlaid per file by a
/// stub file mapping `relative/path.py` to `{expression: type}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TypeEnv {
    pub declared: HashMap<String, String>,
    pub stubs: BTreeMap<String, HashMap<String, String>>,
}

impl TypeEnv {
    pub fn from_cpats(cpats: &[Cpat]) -> TypeEnv {
        let mut declared = HashMap::new();
        for c in cpats {
            for v in &c.input_vars {
                declared.insert(v.name.clone(), v.ty.clone());
            }
        }
        TypeEnv {
            declared,
            stubs: BTreeMap::new(),
        }
    }

    pub fn load_stubs(&mut self, path: &Path) -> Result<(), ApplyError> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        let stubs: BTreeMap<String, HashMap<String, String>> =
            serde_json::from_str(&text).map_err(|e| ApplyError::Stubs {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
        self.stubs.extend(stubs);
        Ok(())
    }

    pub fn for_file(&self, rel: &str) -> HashMap<String, String> {
        let mut env = self.declared.clone();
        if let Some(s) = self.stubs.get(rel) {
            env.extend(s.iter().map(|(k, v)| (k.clone(), v.clone())));
        }
        env
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OverlapPolicy {
    /// Earlier rules claim sites first.
    #[default]
    FirstRuleWins,
    /// Longer sites claim first; rule order breaks ties.
    LongestSite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Patch {
    pub file: String,
    pub rule_id: String,
    pub start: usize,
    pub end: usize,
    pub line: usize,
    /// Single-hunk diff of this site alone.
    pub diff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FileResult {
    pub file: String,
    pub original: String,
    pub patched: String,
    pub diff: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PatchSet {
    pub patches: Vec<Patch>,
    pub files: Vec<FileResult>,
    pub counts: BTreeMap<String, usize>,
    /// Files that did not parse, with the reason.
    pub skipped: Vec<(String, String)>,
    /// Sites dropped for lack of type information.
    pub missing_type_info: usize,
}

impl PatchSet {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// All file diffs concatenated, in path order.
    pub fn unified_diff(&self) -> String {
        self.files.iter().map(|f| f.diff.as_str()).collect()
    }

    pub fn report_json(&self) -> String {
        serde_json::to_string_pretty(&self.counts).expect("counts serialize")
    }
}

pub fn unified_diff(file: &str, original: &str, modified: &str) -> String {
    if original == modified {
        return String::new();
    }
    diffy::DiffOptions::new()
        .set_original_filename(format!("a/{}", file))
        .set_modified_filename(format!("b/{}", file))
        .create_patch(original, modified)
        .to_string()
}

fn imported_modules(ast: &Ast) -> HashSet<String> {
    let mut out = HashSet::new();
    for s in &ast.body {
        match &s.kind {
            StmtKind::Import(aliases) => {
                for a in aliases {
                    out.insert(a.asname.clone().unwrap_or_else(|| a.name.clone()));
                }
            }
            StmtKind::ImportFrom { module, .. } => {
                out.insert(module.clone());
            }
            _ => {}
        }
    }
    out
}

/// Modules the rule's RHS reaches through a concrete dotted reference.
pub fn rhs_modules(rule: &RewriteRule) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    rule.rhs.walk_exprs(&mut |e| {
        if let ExprKind::Attribute { value, .. } = &e.kind {
            if let Some(n) = value.as_name() {
                if ALLOWED_MODULES.contains(&n) || names::is_stdlib_module(n) {
                    out.insert(n.to_string());
                }
            }
        }
    });
    out
}

/// Adds `import m` for each module the rule's RHS uses and the file lacks,
/// after the last top-level import or at the top of the file.
pub fn ensure_imports(src: &str, rule: &RewriteRule) -> String {
    let Ok(ast) = syntax::parse_fragment(src) else {
        return src.to_string();
    };
    let have = imported_modules(&ast);
    let missing: Vec<String> = rhs_modules(rule).into_iter().filter(|m| !have.contains(m)).collect();
    if missing.is_empty() {
        return src.to_string();
    }
    let lines: String = missing.iter().map(|m| format!("import {}\n", m)).collect();
    let last_import = ast
        .body
        .iter()
        .filter(|s| matches!(s.kind, StmtKind::Import(_) | StmtKind::ImportFrom { .. }))
        .last();
    match last_import {
        Some(s) => {
            let at = src[s.span.end..].find('\n').map(|k| s.span.end + k + 1).unwrap_or(src.len());
            let mut out = src.to_string();
            if at == src.len() && !src.ends_with('\n') {
                out.push('\n');
                out.push_str(lines.trim_end_matches('\n'));
            } else {
                out.insert_str(at, &lines);
            }
            out
        }
        None => format!("{}{}", lines, src),
    }
}

fn collect_py(root: &Path, dir: &Path, out: &mut Vec<PathBuf>) -> Result<(), ApplyError> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io_err(dir))?
        .map(|e| e.map(|e| e.path()).map_err(io_err(dir)))
        .collect::<Result<_, _>>()?;
    entries.sort();
    for p in entries {
        if p.is_dir() {
            collect_py(root, &p, out)?;
        } else if p.extension().is_some_and(|x| x == "py") {
            out.push(p);
        }
    }
    Ok(())
}

/// Sorted `*.py` files under `root`.
pub fn python_files(root: &Path) -> Result<Vec<PathBuf>, ApplyError> {
    let mut out = Vec::new();
    collect_py(root, root, &mut out)?;
    Ok(out)
}

enum FileOutcome {
    Skipped(String, String),
    Done {
        patches: Vec<Patch>,
        file: Option<FileResult>,
        missing: usize,
    },
}

/// Matches, guard checks and overlap resolution for one source text.
pub fn plan_file<'r>(
    rules: &'r [RewriteRule],
    ast: &Ast,
    env: &HashMap<String, String>,
    policy: OverlapPolicy,
) -> (Vec<(&'r RewriteRule, MatchBinding)>, usize) {
    let imports = imported_modules(ast);
    let mut missing = 0;
    let mut cands: Vec<(usize, &RewriteRule, MatchBinding)> = Vec::new();
    for (k, r) in rules.iter().enumerate() {
        for b in find_matches(r, ast) {
            match check_guards(&b, &r.guards, env, &imports) {
                Ok(true) => cands.push((k, r, b)),
                Ok(false) => {}
                Err(e) => {
                    log::debug!("rule {}: {}", r.rule_id, e);
                    missing += 1;
                }
            }
        }
    }
    if policy == OverlapPolicy::LongestSite {
        cands.sort_by_key(|(k, _, b)| (std::cmp::Reverse(b.site.end - b.site.start), *k, b.site.start));
    }
    let mut chosen: Vec<(&RewriteRule, MatchBinding)> = Vec::new();
    for (_, r, b) in cands {
        if chosen.iter().all(|(_, c)| !c.site.overlaps(&b.site)) {
            chosen.push((r, b));
        }
    }
    chosen.sort_by_key(|(_, b)| b.site.start);
    (chosen, missing)
}

fn scan_file(rules: &[RewriteRule], root: &Path, path: &Path, env: &TypeEnv, policy: OverlapPolicy) -> Result<FileOutcome, ApplyError> {
    let rel = path
        .strip_prefix(root)
        .unwrap_or(path)
        .to_string_lossy()
        .replace('\\', "/");
    let src = std::fs::read_to_string(path).map_err(io_err(path))?;
    let ast = match syntax::parse_fragment(&src) {
        Ok(a) => a,
        Err(e) => {
            log::warn!("skipping {}: {}", rel, e);
            return Ok(FileOutcome::Skipped(rel, e.to_string()));
        }
    };
    let (chosen, missing) = plan_file(rules, &ast, &env.for_file(&rel), policy);
    if chosen.is_empty() {
        return Ok(FileOutcome::Done {
            patches: Vec::new(),
            file: None,
            missing,
        });
    }
    let patches = chosen
        .iter()
        .map(|(r, b)| Patch {
            file: rel.clone(),
            rule_id: r.rule_id.clone(),
            start: b.site.start,
            end: b.site.end,
            line: b.site.line,
            diff: unified_diff(&rel, &src, &rewrite(r, b, &src)),
        })
        .collect();
    let edits: Vec<(&RewriteRule, &MatchBinding)> = chosen.iter().map(|(r, b)| (*r, b)).collect();
    let mut patched = rewrite_all(&edits, &src);
    let mut seen = HashSet::new();
    for (r, _) in &chosen {
        if seen.insert(&r.rule_id) {
            patched = ensure_imports(&patched, r);
        }
    }
    if let Err(e) = syntax::parse_fragment(&patched) {
        log::error!("patched {} no longer parses: {}", rel, e);
    }
    let diff = unified_diff(&rel, &src, &patched);
    Ok(FileOutcome::Done {
        patches,
        file: Some(FileResult {
            file: rel,
            original: src,
            patched,
            diff,
        }),
        missing,
    })
}

pub fn scan(rules: &[RewriteRule], root: &Path, env: &TypeEnv, policy: OverlapPolicy) -> Result<PatchSet, ApplyError> {
    let files = python_files(root)?;
    let outcomes: Vec<FileOutcome> = files
        .par_iter()
        .map(|p| scan_file(rules, root, p, env, policy))
        .collect::<Result<_, _>>()?;
    let mut set = PatchSet::default();
    for r in rules {
        set.counts.insert(r.rule_id.clone(), 0);
    }
    for o in outcomes {
        match o {
            FileOutcome::Skipped(f, why) => set.skipped.push((f, why)),
            FileOutcome::Done { patches, file, missing } => {
                set.missing_type_info += missing;
                for p in &patches {
                    *set.counts.get_mut(&p.rule_id).expect("rule registered") += 1;
                }
                set.patches.extend(patches);
                set.files.extend(file);
            }
        }
    }
    Ok(set)
}

/// Writes every patched file back under `root`.
pub fn write_patches(set: &PatchSet, root: &Path) -> Result<(), ApplyError> {
    for f in &set.files {
        let p = root.join(&f.file);
        crate::store::write_atomic(&p, f.patched.as_bytes()).map_err(io_err(&p))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::template::parse_rule;

    const INDEXED_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])";

    #[test]
    fn imports_added_once() {
        let r = parse_rule(INDEXED_RULE).unwrap();
        let src = "import os\nx = numpy.sum(a)\n";
        let once = ensure_imports(src, &r);
        assert_eq!(once, "import os\nimport numpy\nx = numpy.sum(a)\n");
        assert_eq!(ensure_imports(&once, &r), once);
        assert_eq!(ensure_imports("x = 1\n", &r), "import numpy\nx = 1\n");
        let plain = parse_rule("x = :[[a]] + 0 => x = :[[a]]").unwrap();
        assert_eq!(ensure_imports("x = y + 0\n", &plain), "x = y + 0\n");
    }

    #[test]
    fn indexed_loop_site() {
        let r = parse_rule(INDEXED_RULE).unwrap();
        let src = "def train(losses):\n    loss = 0\n    for i in range(len(losses)):\n        loss += losses[i]\n    return loss\n";
        let ast = syntax::parse_fragment(src).unwrap();
        let (chosen, _) = plan_file(std::slice::from_ref(&r), &ast, &HashMap::new(), OverlapPolicy::FirstRuleWins);
        assert_eq!(chosen.len(), 1);
        let out = rewrite(chosen[0].0, &chosen[0].1, src);
        assert!(out.contains("    loss = numpy.sum(losses)\n"));
        let d = unified_diff("m.py", src, &out);
        let patch = diffy::Patch::from_str(&d).unwrap();
        assert_eq!(diffy::apply(src, &patch).unwrap(), out);
    }
}
