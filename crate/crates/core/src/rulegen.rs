//! Turns a CPAT and its Applicable variants into rule files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cpat::Cpat;
use crate::llm::{Gateway, GatewayError};
use crate::pipeline::{Variant, VariantStatus};
use crate::store;
use crate::synthesis::{synthesize_from_variant, SynthesisError};
use crate::template::RewriteRule;

#[derive(Debug, thiserror::Error)]
pub enum RulegenError {
    #[error("human example of {cpat}: {source}")]
    Human { cpat: String, source: SynthesisError },
    #[error(transparent)]
    Gateway(#[from] GatewayError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Stem of the rule synthesized from the CPAT's own example. Sorts before
/// every variant rule of the same CPAT.
pub fn human_rule_id(cpat_id: &str) -> String {
    format!("{}.h", cpat_id)
}

pub fn is_human_rule(rule_id: &str) -> bool {
    rule_id.ends_with(".h")
}

fn variant_rule_id(v: &Variant) -> String {
    let n = v.id.rsplit('/').next().unwrap_or(&v.id);
    format!("{}.v{}", v.cpat_id, n)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub variant_id: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RulegenReport {
    pub cpat_id: String,
    pub written: Vec<String>,
    /// Rule id -> id of the earlier rule it duplicates up to renaming.
    pub duplicates: BTreeMap<String, String>,
    pub skipped: Vec<Skipped>,
}

/// The rule from the CPAT's LHS/RHS pair with the miner's guards.
pub fn human_rule(cpat: &Cpat) -> Result<RewriteRule, RulegenError> {
    synthesize_from_variant(&cpat.lhs, cpat, &BTreeMap::new(), &human_rule_id(&cpat.id))
        .map(|s| s.rule)
        .map_err(|source| RulegenError::Human {
            cpat: cpat.id.clone(),
            source,
        })
}

/// Synthesizes one rule per Applicable variant. Variants that fail to
/// synthesize are logged and skipped; alpha-equivalent rules are dropped.
pub fn synthesize_rules(
    gateway: &Gateway,
    cpat: &Cpat,
    variants: &[Variant],
) -> Result<(Vec<RewriteRule>, RulegenReport), RulegenError> {
    let mut report = RulegenReport {
        cpat_id: cpat.id.clone(),
        ..Default::default()
    };
    let human = human_rule(cpat)?;
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    seen.insert(shape(&human), human.rule_id.clone());
    let mut rules = vec![human];
    for v in variants.iter().filter(|v| v.status == VariantStatus::Applicable) {
        let id = variant_rule_id(v);
        let types = crate::llm::or_empty(gateway.infer_types(&v.code, cpat))?;
        match synthesize_from_variant(&v.code, cpat, &types, &id) {
            Ok(s) => {
                let key = shape(&s.rule);
                if let Some(first) = seen.get(&key) {
                    report.duplicates.insert(id, first.clone());
                } else {
                    seen.insert(key, id);
                    rules.push(s.rule);
                }
            }
            Err(e) => {
                log::warn!("{}: rule synthesis failed: {}", v.id, e);
                report.skipped.push(Skipped {
                    variant_id: v.id.clone(),
                    reason: e.to_string(),
                });
            }
        }
    }
    report.written = rules.iter().map(|r| r.rule_id.clone()).collect();
    Ok((rules, report))
}

fn shape(r: &RewriteRule) -> String {
    r.with_numbered_vars().serialize()
}

/// Replaces the `.rule` files in `dir` with `rules`.
pub fn write_rule_dir(dir: &Path, rules: &[RewriteRule]) -> Result<Vec<PathBuf>, RulegenError> {
    let io = |p: &Path| {
        let path = p.display().to_string();
        move |source| RulegenError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let keep: BTreeSet<String> = rules.iter().map(|r| format!("{}.rule", r.rule_id)).collect();
    for e in std::fs::read_dir(dir).map_err(io(dir))? {
        let p = e.map_err(io(dir))?.path();
        let name = p.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default();
        if name.ends_with(".rule") && !keep.contains(&name) {
            std::fs::remove_file(&p).map_err(io(&p))?;
        }
    }
    let mut out = Vec::new();
    for r in rules {
        let p = dir.join(format!("{}.rule", r.rule_id));
        store::write_atomic(&p, r.serialize().as_bytes()).map_err(io(&p))?;
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::applier::load_rule_dir;

    #[test]
    fn human_rule_sorts_first_and_round_trips() {
        let cpat = Cpat::from_json(
            r#"{"id": "cpat-1", "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
            "rhs": "result = numpy.sum(elements)",
            "input_vars": [{"name": "elements", "type": "List[int]"}], "output_vars": ["result"],
            "imports": ["numpy"], "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]}}"#,
            "t",
        )
        .unwrap();
        let h = human_rule(&cpat).unwrap();
        assert_eq!(
            h.serialize(),
            ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]\n"
        );
        let mut v = synthesize_from_variant(
            "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]",
            &cpat,
            &BTreeMap::new(),
            "cpat-1.v10",
        )
        .unwrap()
        .rule;
        let mut v2 = v.clone();
        v.rule_id = "cpat-1.v2".into();
        v2.rule_id = "cpat-1.v10".into();
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("stale.rule"), "x = 1\n=>\nx = 2\n").unwrap();
        write_rule_dir(dir.path(), &[v2, h, v]).unwrap();
        let ids: Vec<String> = load_rule_dir(dir.path()).unwrap().into_iter().map(|r| r.rule_id).collect();
        assert_eq!(ids, vec!["cpat-1.h", "cpat-1.v2", "cpat-1.v10"]);
    }
}
