//! Pairing a variant's variables with the CPAT's declared inputs and outputs.

use std::collections::BTreeMap;

use crate::cpat::Cpat;
use crate::syntax::{self, names, Ast};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CorrespondenceError {
    #[error("CPAT does not parse: {0}")]
    Cpat(String),
    #[error("cannot pair {want} unmatched {what} with {have} candidate variables")]
    Count {
        what: &'static str,
        want: usize,
        have: usize,
    },
}

/// CPAT variable name to variant variable name.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Correspondence {
    pub map: BTreeMap<String, String>,
}

impl Correspondence {
    pub fn cpat_name_of(&self, variant_name: &str) -> Option<&str> {
        self.map
            .iter()
            .find(|(_, v)| *v == variant_name)
            .map(|(k, _)| k.as_str())
    }
}

fn is_module(n: &str, cpat: &Cpat) -> bool {
    cpat.imports.contains(n) || names::is_stdlib_module(n)
}

/// Positional pairing: names first, then leftover free variables to leftover
/// inputs by first occurrence, then leftover top-level stores to leftover outputs.
pub fn correspond(variant: &Ast, cpat: &Cpat) -> Result<Correspondence, CorrespondenceError> {
    let lhs = syntax::parse_fragment(&cpat.lhs).map_err(|e| CorrespondenceError::Cpat(e.to_string()))?;
    let ci = names::analyze(&lhs.body);
    let vi = names::analyze(&variant.body);
    let mut map = BTreeMap::new();

    let mut inputs: Vec<&String> = cpat.input_vars.iter().map(|v| &v.name).collect();
    inputs.sort_by_key(|n| ci.free.iter().position(|f| f == *n).unwrap_or(usize::MAX));
    let outputs: Vec<&String> = cpat.output_vars.iter().filter(|o| !inputs.contains(o)).collect();

    for c in inputs.iter().chain(outputs.iter()) {
        if vi.all.contains(c) {
            map.insert((*c).clone(), (*c).clone());
        }
    }
    let taken = |map: &BTreeMap<String, String>, n: &String| map.values().any(|v| v == n);

    let in_left: Vec<&String> = inputs.iter().copied().filter(|c| !map.contains_key(*c)).collect();
    let in_cands: Vec<&String> = vi
        .free
        .iter()
        .filter(|n| !names::is_builtin(n) && !is_module(n, cpat) && !taken(&map, n))
        .collect();
    if in_left.len() != in_cands.len() {
        return Err(CorrespondenceError::Count {
            what: "inputs",
            want: in_left.len(),
            have: in_cands.len(),
        });
    }
    for (c, v) in in_left.into_iter().zip(in_cands) {
        map.insert(c.clone(), v.clone());
    }

    let out_left: Vec<&String> = outputs.iter().copied().filter(|c| !map.contains_key(*c)).collect();
    if !out_left.is_empty() {
        let pick = |pool: &[String]| -> Vec<String> {
            pool.iter()
                .filter(|n| !vi.loop_targets.contains(n) && !names::is_builtin(n) && !taken(&map, n))
                .cloned()
                .collect()
        };
        let mut cands = pick(&vi.top_level_bound);
        if cands.len() != out_left.len() {
            cands = pick(&vi.bound);
        }
        if cands.len() != out_left.len() {
            return Err(CorrespondenceError::Count {
                what: "outputs",
                want: out_left.len(),
                have: cands.len(),
            });
        }
        for (c, v) in out_left.into_iter().zip(cands) {
            map.insert(c.clone(), v);
        }
    }
    Ok(Correspondence { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_fragment;

    fn cpat(lhs: &str, inputs: &[&str], outputs: &[&str]) -> Cpat {
        Cpat {
            id: "c".into(),
            lhs: lhs.into(),
            rhs: lhs.into(),
            input_vars: inputs
                .iter()
                .map(|n| crate::cpat::TypedVar { name: n.to_string(), ty: "int".into() })
                .collect(),
            output_vars: outputs.iter().map(|s| s.to_string()).collect(),
            imports: Default::default(),
            miner_guards: Default::default(),
            human_examples: 1,
        }
    }

    #[test]
    fn renamed_variant() {
        let c = cpat("result = 0\nfor elem in elements:\n    result = elem + result", &["elements"], &["result"]);
        let v = parse_fragment("loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]").unwrap();
        let m = correspond(&v, &c).unwrap().map;
        assert_eq!(m["elements"], "losses");
        assert_eq!(m["result"], "loss");
    }

    #[test]
    fn callable_input() {
        let c = cpat("d = {}\nfor i in array:\n    d.setdefault(i, []).append(f(i))", &["array", "f"], &["d"]);
        let v = parse_fragment("groups = {}\nfor x in xs:\n    k = key(x)\n    if k not in groups:\n        groups[k] = []\n    groups[k].append(x)").unwrap();
        let m = correspond(&v, &c).unwrap().map;
        assert_eq!(m["array"], "xs");
        assert_eq!(m["f"], "key");
        assert_eq!(m["d"], "groups");
    }

    #[test]
    fn too_many_free_names() {
        let c = cpat("result = 0\nfor elem in elements:\n    result = elem + result", &["elements"], &["result"]);
        let v = parse_fragment("s = 0\nfor x in a:\n    s += x * w").unwrap();
        assert!(correspond(&v, &c).is_err());
    }
}
