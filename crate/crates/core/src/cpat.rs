//! Code-change patterns: the before/after examples everything else expands from.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::syntax::{self, names, Ast, ParseError};
use crate::template::GuardPredicate;

#[derive(Debug, thiserror::Error)]
pub enum CpatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CPAT file {path}: {message}")]
    Format { path: String, message: String },
    #[error("CPAT {id}: {side} does not parse: {source}")]
    Parse {
        id: String,
        side: &'static str,
        #[source]
        source: ParseError,
    },
    #[error("CPAT {id}: {message}")]
    Invariant { id: String, message: String },
    #[error("unknown CPAT id {0}")]
    Unknown(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedVar {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: String,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cpat {
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    pub input_vars: Vec<TypedVar>,
    pub output_vars: Vec<String>,
    #[serde(default)]
    pub imports: BTreeSet<String>,
    #[serde(default)]
    pub miner_guards: BTreeMap<String, Vec<GuardPredicate>>,
    /// Number of human-written change instances the CPAT was mined from.
    #[serde(default = "one")]
    pub human_examples: usize,
}

impl Cpat {
    pub fn from_json(text: &str, path: &str) -> Result<Cpat, CpatError> {
        let c: Cpat = serde_json::from_str(text).map_err(|e| CpatError::Format {
            path: path.to_string(),
            message: e.to_string(),
        })?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Cpat, CpatError> {
        let text = std::fs::read_to_string(path).map_err(|source| CpatError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Cpat::from_json(&text, &path.display().to_string())
    }

    pub fn lhs_ast(&self) -> Result<Ast, CpatError> {
        syntax::parse_fragment(&self.lhs).map_err(|source| CpatError::Parse {
            id: self.id.clone(),
            side: "lhs",
            source,
        })
    }

    pub fn rhs_ast(&self) -> Result<Ast, CpatError> {
        syntax::parse_fragment(&self.rhs).map_err(|source| CpatError::Parse {
            id: self.id.clone(),
            side: "rhs",
            source,
        })
    }

    pub fn input_names(&self) -> Vec<String> {
        self.input_vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn input_type(&self, name: &str) -> Option<&str> {
        self.input_vars
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.ty.as_str())
    }

    /// Checks the invariants: both sides parse, inputs are read free in the
    /// LHS, outputs are stored to (or mutated) on both sides.
    pub fn validate(&self) -> Result<(), CpatError> {
        let lhs = self.lhs_ast()?;
        let rhs = self.rhs_ast()?;
        let bad = |message: String| CpatError::Invariant {
            id: self.id.clone(),
            message,
        };
        let li = names::analyze(&lhs.body);
        let ri = names::analyze(&rhs.body);
        for v in &self.input_vars {
            if !li.free.contains(&v.name) {
                return Err(bad(format!("input variable {} is not free in the LHS", v.name)));
            }
        }
        for o in &self.output_vars {
            let stored = |i: &names::NameInfo| i.bound.contains(o) || i.mutated.contains(o);
            if !stored(&li) || !stored(&ri) {
                return Err(bad(format!("output variable {} is not assigned on both sides", o)));
            }
        }
        for g in self.miner_guards.keys() {
            if !li.all.contains(g) {
                return Err(bad(format!("miner guard on {} which the LHS never mentions", g)));
            }
        }
        Ok(())
    }
}

/// Loads every `*.json` CPAT in a directory, sorted by id.
pub fn load_dir(dir: &Path) -> Result<Vec<Cpat>, CpatError> {
    let io = |source| CpatError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.extension().and_then(|e| e.to_str()) == Some("json") {
            out.push(Cpat::load(&p)?);
        }
    }
    out.sort_by(|a, b| natural_key(&a.id).cmp(&natural_key(&b.id)));
    Ok(out)
}

/// Sort key that orders "cpat-2" before "cpat-10", chunk by chunk.
pub fn natural_key(id: &str) -> (Vec<NaturalChunk>, String) {
    let mut chunks = Vec::new();
    let mut rest = id;
    while let Some(c) = rest.chars().next() {
        let digit = c.is_ascii_digit();
        let end = rest
            .find(|x: char| x.is_ascii_digit() != digit)
            .unwrap_or(rest.len());
        let (head, tail) = rest.split_at(end);
        chunks.push(if digit {
            NaturalChunk::Num(head.parse().unwrap_or(u64::MAX))
        } else {
            NaturalChunk::Text(head.to_string())
        });
        rest = tail;
    }
    (chunks, id.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum NaturalChunk {
    Num(u64),
    Text(String),
}

pub fn find<'a>(cpats: &'a [Cpat], id: &str) -> Result<&'a Cpat, CpatError> {
    cpats
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CpatError::Unknown(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUM_LOOP_JSON: &str = r#"{
        "id": "cpat-1",
        "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
        "rhs": "result = numpy.sum(elements)",
        "input_vars": [{"name": "elements", "type": "List[int]"}],
        "output_vars": ["result"],
        "imports": ["numpy"],
        "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]}
    }"#;

    #[test]
    fn loads_and_validates() {
        let c = Cpat::from_json(SUM_LOOP_JSON, "x").unwrap();
        assert_eq!(c.human_examples, 1);
        assert_eq!(
            c.miner_guards["elements"],
            [GuardPredicate::TypeIs("List[int]".into())]
        );
    }

    #[test]
    fn rejects_non_free_input() {
        let bad = SUM_LOOP_JSON.replace("\"name\": \"elements\"", "\"name\": \"result\"");
        assert!(matches!(
            Cpat::from_json(&bad, "x"),
            Err(CpatError::Invariant { .. })
        ));
    }

    #[test]
    fn mutated_output_counts_as_assigned() {
        let j = r#"{"id": "c2", "lhs": "for k, v in add_dict.items():\n    d[k] = v",
            "rhs": "d.update(add_dict)",
            "input_vars": [{"name": "add_dict", "type": "Dict[str, int]"}, {"name": "d", "type": "Dict[str, int]"}],
            "output_vars": ["d"]}"#;
        Cpat::from_json(j, "x").unwrap();
    }

    #[test]
    fn natural_order() {
        let mut ids = vec!["cpat-10", "cpat-2", "cpat-1"];
        ids.sort_by_key(|i| natural_key(i));
        assert_eq!(ids, ["cpat-1", "cpat-2", "cpat-10"]);
    }
}
