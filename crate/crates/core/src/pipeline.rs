//! Variant expansion: prompt and feedback iterations, the validation ladder,
//! and the V / V_c / V_u / V_a counts.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::applicability::{is_applicable_with, Containment};
use crate::cpat::{Cpat, CpatError};
use crate::harness::{wrap_with, Harness, HarnessError, TestCase, TestStatus};
use crate::llm::{or_empty, Gateway, GatewayError};
use crate::store::{self, StoreError};
use crate::synthesis::correspond;
use crate::syntax::{self, names};
use crate::template::normalize_type;

pub const STORE_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Gateway(#[from] GatewayError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Cpat(#[from] CpatError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("invalid expansion config: {0}")]
    Config(String),
    #[error("ladder violation: {0}")]
    Ladder(String),
    #[error("labels file {path}: {message}")]
    Labels { path: String, message: String },
    #[error("interrupted; completed units are in the checkpoint")]
    Interrupted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VariantStatus {
    Raw,
    SyntaxFail,
    TypeFail,
    ImportFail,
    SemanticFail,
    Correct,
    NotUseful,
    Useful,
    NotApplicable,
    Applicable,
}

impl VariantStatus {
    pub const ALL: [VariantStatus; 10] = [
        VariantStatus::Raw,
        VariantStatus::SyntaxFail,
        VariantStatus::TypeFail,
        VariantStatus::ImportFail,
        VariantStatus::SemanticFail,
        VariantStatus::Correct,
        VariantStatus::NotUseful,
        VariantStatus::Useful,
        VariantStatus::NotApplicable,
        VariantStatus::Applicable,
    ];

    /// Position on the ladder. Siblings share a level.
    pub fn level(self) -> u8 {
        use VariantStatus::*;
        match self {
            Raw => 0,
            SyntaxFail | TypeFail | ImportFail | SemanticFail | Correct => 1,
            NotUseful | Useful => 2,
            NotApplicable | Applicable => 3,
        }
    }

    pub fn can_advance_to(self, next: VariantStatus) -> bool {
        use VariantStatus::*;
        match self {
            Raw => next.level() == 1,
            Correct => matches!(next, NotUseful | Useful),
            Useful => matches!(next, NotApplicable | Applicable),
            _ => false,
        }
    }

    pub fn is_terminal(self) -> bool {
        use VariantStatus::*;
        !matches!(self, Raw | Correct | Useful)
    }

    pub fn is_correct(self) -> bool {
        use VariantStatus::*;
        matches!(self, Correct | NotUseful | Useful | NotApplicable | Applicable)
    }

    pub fn is_useful(self) -> bool {
        use VariantStatus::*;
        matches!(self, Useful | NotApplicable | Applicable)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Variant {
    pub id: String,
    pub code: String,
    pub cpat_id: String,
    pub temperature: f64,
    /// Iteration index passed to the gateway for the call that produced this variant.
    pub prompt_iteration: u32,
    /// Feedback round, 0 for plain prompt iterations.
    #[serde(default)]
    pub feedback_iteration: u32,
    pub feedback_parent: Option<String>,
    pub status: VariantStatus,
    pub norm_hash: String,
}

impl Variant {
    pub fn advance(&mut self, next: VariantStatus) -> Result<(), PipelineError> {
        if !self.status.can_advance_to(next) {
            return Err(PipelineError::Ladder(format!(
                "{}: {:?} -> {:?}",
                self.id, self.status, next
            )));
        }
        self.status = next;
        Ok(())
    }
}

/// SHA-256 of the canonical print; unparsable code hashes its whitespace-folded text.
pub fn norm_hash(code: &str) -> String {
    let basis = match syntax::canonicalize(code) {
        Some(c) => c,
        None => {
            let folded: Vec<&str> = code.split_whitespace().collect();
            format!("\0unparsed\0{}", folded.join(" "))
        }
    };
    hex::encode(Sha256::digest(basis.as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExpansionConfig {
    pub temperatures: Vec<f64>,
    pub prompt_iterations: u32,
    pub feedback_iterations: u32,
    pub usefulness_labels: Option<PathBuf>,
    /// Seed feedback with Correct variants instead of Applicable ones.
    pub seed_from_correct: bool,
}

impl Default for ExpansionConfig {
    fn default() -> Self {
        ExpansionConfig {
            temperatures: vec![0.5, 0.7],
            prompt_iterations: 3,
            feedback_iterations: 5,
            usefulness_labels: None,
            seed_from_correct: false,
        }
    }
}

impl ExpansionConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.prompt_iterations < 1 {
            return Err(PipelineError::Config("prompt_iterations must be at least 1".into()));
        }
        if let Some(t) = self.temperatures.iter().find(|t| !(0.0..=2.0).contains(*t)) {
            return Err(PipelineError::Config(format!("temperature {} outside [0, 2]", t)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum LabelEntry {
    Plain(bool),
    Annotated {
        useful: bool,
        #[serde(default)]
        rationale: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Labels {
    pub useful: BTreeMap<String, bool>,
    pub rationale: BTreeMap<String, String>,
}

impl Labels {
    /// JSON object keyed by norm_hash; values are `true`/`false` or
    /// `{"useful": bool, "rationale": "..."}`.
    pub fn parse(text: &str, path: &str) -> Result<Labels, PipelineError> {
        let raw: BTreeMap<String, LabelEntry> = serde_json::from_str(text).map_err(|e| PipelineError::Labels {
            path: path.to_string(),
            message: e.to_string(),
        })?;
        let mut l = Labels::default();
        for (h, e) in raw {
            match e {
                LabelEntry::Plain(b) => {
                    l.useful.insert(h, b);
                }
                LabelEntry::Annotated { useful, rationale } => {
                    l.useful.insert(h.clone(), useful);
                    if !rationale.is_empty() {
                        l.rationale.insert(h, rationale);
                    }
                }
            }
        }
        Ok(l)
    }

    pub fn load(path: &Path) -> Result<Labels, PipelineError> {
        let text = std::fs::read_to_string(path).map_err(|e| PipelineError::Labels {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Labels::parse(&text, &path.display().to_string())
    }

    pub fn to_json(&self) -> String {
        let mut m = serde_json::Map::new();
        for (h, u) in &self.useful {
            let e = match self.rationale.get(h) {
                Some(r) => serde_json::json!({"useful": u, "rationale": r}),
                None => serde_json::json!({"useful": u}),
            };
            m.insert(h.clone(), e);
        }
        serde_json::to_string_pretty(&m).expect("labels serialize")
    }
}

/// Promotes Correct variants to Useful or NotUseful.
pub fn apply_usefulness(variants: &mut [Variant], labels: Option<&Labels>) -> Result<(), PipelineError> {
    for v in variants.iter_mut().filter(|v| v.status == VariantStatus::Correct) {
        let useful = labels.map_or(true, |l| l.useful.get(&v.norm_hash).copied().unwrap_or(true));
        v.advance(if useful { VariantStatus::Useful } else { VariantStatus::NotUseful })?;
    }
    Ok(())
}

/// Label keys that match none of the variants.
pub fn unknown_labels(variants: &[Variant], labels: &Labels) -> Vec<String> {
    let seen: HashSet<&str> = variants.iter().map(|v| v.norm_hash.as_str()).collect();
    labels
        .useful
        .keys()
        .filter(|h| !seen.contains(h.as_str()))
        .cloned()
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub cpat_id: String,
    pub v: usize,
    pub v_c: usize,
    pub v_u: usize,
    pub v_a: usize,
    pub by_status: BTreeMap<String, usize>,
    pub human_examples: usize,
    pub expansion_factor: f64,
}

pub fn summarize(cpat_id: &str, human_examples: usize, variants: &[Variant]) -> ExpansionReport {
    let mut by_status = BTreeMap::new();
    for v in variants {
        *by_status.entry(format!("{:?}", v.status)).or_insert(0) += 1;
    }
    let v_a = variants.iter().filter(|v| v.status == VariantStatus::Applicable).count();
    ExpansionReport {
        cpat_id: cpat_id.to_string(),
        v: variants.len(),
        v_c: variants.iter().filter(|v| v.status.is_correct()).count(),
        v_u: variants.iter().filter(|v| v.status.is_useful()).count(),
        v_a,
        by_status,
        human_examples,
        expansion_factor: if human_examples == 0 {
            0.0
        } else {
            v_a as f64 / human_examples as f64
        },
    }
}

pub fn save_variants(path: &Path, variants: &[Variant]) -> Result<(), StoreError> {
    store::save_versioned(path, "variants", STORE_VERSION, variants)
}

pub fn load_variants(path: &Path) -> Result<Vec<Variant>, StoreError> {
    store::load_versioned(path, "variants", STORE_VERSION)
}

pub fn save_tests(path: &Path, tests: &[TestCase]) -> Result<(), StoreError> {
    store::save_versioned(path, "tests", STORE_VERSION, tests)
}

pub fn load_tests(path: &Path) -> Result<Vec<TestCase>, StoreError> {
    store::load_versioned(path, "tests", STORE_VERSION)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Created { unit: String, variant: Variant },
    Transition { id: String, from: VariantStatus, to: VariantStatus },
    UnitDone { unit: String },
}

/// Checks that every transition in the log starts where the variant stands
/// and moves forward.
pub fn audit_ladder(events: &[Event]) -> Result<(), PipelineError> {
    let mut at: BTreeMap<&str, VariantStatus> = BTreeMap::new();
    for e in events {
        match e {
            Event::Created { variant, .. } => {
                at.insert(&variant.id, VariantStatus::Raw);
            }
            Event::Transition { id, from, to } => {
                let cur = at
                    .get(id.as_str())
                    .ok_or_else(|| PipelineError::Ladder(format!("{} transitions before creation", id)))?;
                if cur != from || !from.can_advance_to(*to) {
                    return Err(PipelineError::Ladder(format!("{}: {:?} -> {:?} while at {:?}", id, from, to, cur)));
                }
                at.insert(id, *to);
            }
            Event::UnitDone { .. } => {}
        }
    }
    Ok(())
}

/// Append-only event log. Reopening restores the variants of completed units.
pub struct Checkpoint {
    file: File,
    done: BTreeSet<String>,
    restored: Vec<Variant>,
}

impl Checkpoint {
    pub fn open(path: &Path) -> Result<Checkpoint, PipelineError> {
        let io = |source| StoreError::Io {
            path: path.display().to_string(),
            source,
        };
        let events: Vec<Event> = match std::fs::read_to_string(path) {
            Ok(text) => store::from_jsonl(&text).map_err(|(line, e)| StoreError::Format {
                path: path.display().to_string(),
                line,
                message: e.to_string(),
            })?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(io(e).into()),
        };
        audit_ladder(&events)?;
        let mut done = BTreeSet::new();
        let mut by_id: BTreeMap<String, (String, Variant)> = BTreeMap::new();
        let mut order: Vec<String> = Vec::new();
        for e in events {
            match e {
                Event::Created { unit, variant } => {
                    if !by_id.contains_key(&variant.id) {
                        order.push(variant.id.clone());
                    }
                    by_id.insert(variant.id.clone(), (unit, variant));
                }
                Event::Transition { id, to, .. } => {
                    if let Some((_, v)) = by_id.get_mut(&id) {
                        v.status = to;
                    }
                }
                Event::UnitDone { unit } => {
                    done.insert(unit);
                }
            }
        }
        let restored = order
            .into_iter()
            .filter_map(|id| by_id.remove(&id))
            .filter(|(u, _)| done.contains(u))
            .map(|(_, v)| v)
            .collect();
        if let Some(d) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(d).map_err(io)?;
        }
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        Ok(Checkpoint { file, done, restored })
    }

    fn append(&mut self, events: &[Event]) -> Result<(), PipelineError> {
        self.file
            .write_all(store::to_jsonl(events).as_bytes())
            .and_then(|_| self.file.flush())
            .map_err(|source| {
                PipelineError::Store(StoreError::Io {
                    path: "checkpoint".into(),
                    source,
                })
            })
    }

    pub fn is_done(&self, unit: &str) -> bool {
        self.done.contains(unit)
    }
}

/// Generates tests over iterations `1..=iterations` at one temperature and
/// runs the three-step validation.
pub fn generate_test_suite(
    gateway: &Gateway,
    harness: &Harness,
    cpat: &Cpat,
    temperature: f64,
    iterations: u32,
) -> Result<Vec<TestCase>, PipelineError> {
    let mut raw = Vec::new();
    let mut seen = HashSet::new();
    for i in 1..=iterations {
        for (k, frag) in or_empty(gateway.generate_tests(cpat, temperature, i))?.into_iter().enumerate() {
            if seen.insert(frag.text.clone()) {
                raw.push(TestCase {
                    id: format!("{}/t{}-{}", cpat.id, i, k),
                    code: frag.text,
                    cpat_id: cpat.id.clone(),
                    status: TestStatus::RawT,
                    temperature,
                    iteration: i,
                });
            }
        }
    }
    Ok(harness.validate_tests(raw, cpat)?)
}

fn types_agree(inferred: &str, declared: &str) -> bool {
    let (a, b) = (normalize_type(inferred), normalize_type(declared));
    let base = |s: &str| s.split('[').next().unwrap_or("").to_string();
    a == b || a == "Any" || (a == base(&b) || b == base(&a))
}

/// Everything a run needs besides the CPAT.
pub struct Expander<'a> {
    pub gateway: &'a Gateway,
    pub harness: &'a Harness<'a>,
    pub labels: Option<&'a Labels>,
    pub allowlist: BTreeSet<String>,
    pub containment: Containment,
    /// Checked between units; set it to stop after the current one.
    pub cancel: Option<&'a AtomicBool>,
}

impl<'a> Expander<'a> {
    pub fn new(gateway: &'a Gateway, harness: &'a Harness<'a>) -> Expander<'a> {
        Expander {
            gateway,
            harness,
            labels: None,
            allowlist: names::STDLIB_MODULES.iter().map(|s| s.to_string()).collect(),
            containment: Containment::Multiset,
            cancel: None,
        }
    }

    fn check_cancel(&self) -> Result<(), PipelineError> {
        match self.cancel {
            Some(c) if c.load(Ordering::SeqCst) => Err(PipelineError::Interrupted),
            _ => Ok(()),
        }
    }

    /// Syntax, type and import checks. Leaves the status Raw when all pass.
    pub fn validate_static(&self, v: &mut Variant, cpat: &Cpat) -> Result<(), PipelineError> {
        self.static_checks(v, cpat).map(|_| ())
    }

    /// Returns the inferred imports when every check passes.
    fn static_checks(&self, v: &mut Variant, cpat: &Cpat) -> Result<Option<BTreeSet<String>>, PipelineError> {
        let fail = |v: &mut Variant, s| v.advance(s).map(|_| None);
        let Ok(ast) = syntax::parse_fragment(&v.code) else {
            return fail(v, VariantStatus::SyntaxFail);
        };
        let Ok(corr) = correspond(&ast, cpat) else {
            return fail(v, VariantStatus::TypeFail);
        };
        let types = or_empty(self.gateway.infer_types(&v.code, cpat))?;
        for input in &cpat.input_vars {
            let local = corr.map.get(&input.name).unwrap_or(&input.name);
            if let Some(t) = types.get(local) {
                if !types_agree(t, &input.ty) {
                    return fail(v, VariantStatus::TypeFail);
                }
            }
        }
        // Unverifiable imports count as disallowed.
        let imports = match self.gateway.infer_imports(&v.code, cpat) {
            Err(GatewayError::Format(_)) => return fail(v, VariantStatus::ImportFail),
            r => r?,
        };
        if imports.iter().any(|m| !cpat.imports.contains(m) && !self.allowlist.contains(m)) {
            return fail(v, VariantStatus::ImportFail);
        }
        Ok(Some(imports))
    }

    /// Walks one variant down the whole ladder.
    pub fn classify(&self, v: &mut Variant, cpat: &Cpat, tests: &[TestCase]) -> Result<(), PipelineError> {
        let Some(imports) = self.static_checks(v, cpat)? else {
            return Ok(());
        };
        let ast = syntax::parse_fragment(&v.code).expect("parsed in static checks");
        let corr = correspond(&ast, cpat).expect("paired in static checks");
        let correct = match wrap_with(&ast, cpat, &corr, &imports) {
            Ok(src) => self.harness.classify_semantic(&v.id, &src, tests)?,
            Err(_) => false,
        };
        if !correct {
            return v.advance(VariantStatus::SemanticFail);
        }
        v.advance(VariantStatus::Correct)?;
        apply_usefulness(std::slice::from_mut(v), self.labels)?;
        if v.status == VariantStatus::Useful {
            let ok = is_applicable_with(&ast, cpat, self.containment)?.passed;
            v.advance(if ok { VariantStatus::Applicable } else { VariantStatus::NotApplicable })?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn run_unit(
        &self,
        cpat: &Cpat,
        tests: &[TestCase],
        unit: String,
        frags: Vec<String>,
        temperature: f64,
        prompt_iteration: u32,
        feedback_iteration: u32,
        parent: Option<&str>,
        state: &mut State,
        ckpt: &mut Option<&mut Checkpoint>,
    ) -> Result<(), PipelineError> {
        let mut fresh = Vec::new();
        for code in frags {
            let h = norm_hash(&code);
            if !state.hashes.insert(h.clone()) {
                continue;
            }
            fresh.push(Variant {
                id: format!("{}/{}", cpat.id, state.variants.len() + fresh.len()),
                code,
                cpat_id: cpat.id.clone(),
                temperature,
                prompt_iteration,
                feedback_iteration,
                feedback_parent: parent.map(str::to_string),
                status: VariantStatus::Raw,
                norm_hash: h,
            });
        }
        let created: Vec<Event> = fresh
            .iter()
            .map(|v| Event::Created {
                unit: unit.clone(),
                variant: v.clone(),
            })
            .collect();
        let results: Vec<Result<Vec<VariantStatus>, PipelineError>> = fresh
            .par_iter()
            .map(|v| {
                let mut w = v.clone();
                let mut trail = Vec::new();
                // replay the ladder step by step so each transition is logged
                self.classify(&mut w, cpat, tests)?;
                let mut s = w.status;
                while s != VariantStatus::Raw {
                    trail.push(s);
                    s = match s {
                        VariantStatus::Useful | VariantStatus::NotUseful => VariantStatus::Correct,
                        VariantStatus::Applicable | VariantStatus::NotApplicable => VariantStatus::Useful,
                        _ => VariantStatus::Raw,
                    };
                }
                trail.reverse();
                Ok(trail)
            })
            .collect();
        let mut events = created;
        for (v, r) in fresh.iter_mut().zip(results) {
            for to in r? {
                events.push(Event::Transition {
                    id: v.id.clone(),
                    from: v.status,
                    to,
                });
                v.advance(to)?;
            }
        }
        events.push(Event::UnitDone { unit });
        if let Some(c) = ckpt.as_deref_mut() {
            c.append(&events)?;
        }
        state.variants.extend(fresh);
        Ok(())
    }

    /// Runs the expansion loop for one CPAT. With a checkpoint, completed
    /// units are restored from the log instead of being recomputed.
    pub fn expand(
        &self,
        cpat: &Cpat,
        cfg: &ExpansionConfig,
        tests: &[TestCase],
        mut ckpt: Option<&mut Checkpoint>,
    ) -> Result<(Vec<Variant>, ExpansionReport), PipelineError> {
        cfg.validate()?;
        let mut state = State::default();
        if let Some(c) = ckpt.as_deref_mut() {
            let prefix = format!("{}/", cpat.id);
            for v in c.restored.iter().filter(|v| v.id.starts_with(&prefix)) {
                state.hashes.insert(v.norm_hash.clone());
                state.variants.push(v.clone());
            }
        }
        let seed_ok = |s: VariantStatus| {
            if cfg.seed_from_correct {
                s.is_correct()
            } else {
                s == VariantStatus::Applicable
            }
        };
        for &t in &cfg.temperatures {
            for i in 1..=cfg.prompt_iterations {
                let unit = format!("{}|t={}|p={}", cpat.id, t, i);
                if ckpt.as_deref().is_some_and(|c| c.is_done(&unit)) {
                    continue;
                }
                self.check_cancel()?;
                let frags = or_empty(self.gateway.generate_variants(cpat, t, i, None))?;
                let frags = frags.into_iter().map(|f| f.text).collect();
                self.run_unit(cpat, tests, unit, frags, t, i, 0, None, &mut state, &mut ckpt)?;
            }
            let mut used: HashSet<String> = HashSet::new();
            for r in 1..=cfg.feedback_iterations {
                let seeds: Vec<(String, String)> = state
                    .variants
                    .iter()
                    .filter(|v| v.temperature == t && seed_ok(v.status) && !used.contains(&v.id))
                    .map(|v| (v.id.clone(), v.code.clone()))
                    .collect();
                if seeds.is_empty() {
                    break;
                }
                for (sid, code) in seeds {
                    used.insert(sid.clone());
                    let unit = format!("{}|t={}|f={}|seed={}", cpat.id, t, r, sid);
                    if ckpt.as_deref().is_some_and(|c| c.is_done(&unit)) {
                        continue;
                    }
                    self.check_cancel()?;
                    let frags = or_empty(self.gateway.generate_variants(cpat, t, r, Some(&code)))?;
                    let frags = frags.into_iter().map(|f| f.text).collect();
                    self.run_unit(cpat, tests, unit, frags, t, r, r, Some(&sid), &mut state, &mut ckpt)?;
                }
            }
        }
        let report = summarize(&cpat.id, cpat.human_examples, &state.variants);
        Ok((state.variants, report))
    }
}

#[derive(Default)]
struct State {
    variants: Vec<Variant>,
    hashes: HashSet<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_edges() {
        use VariantStatus::*;
        assert!(Raw.can_advance_to(SyntaxFail));
        assert!(Correct.can_advance_to(Useful));
        assert!(!Useful.can_advance_to(Correct));
        assert!(!Applicable.can_advance_to(Useful));
        assert!(!Raw.can_advance_to(Useful));
        for s in VariantStatus::ALL {
            assert_eq!(s.is_terminal(), VariantStatus::ALL.iter().all(|n| !s.can_advance_to(*n)));
        }
    }

    #[test]
    fn hash_ignores_layout() {
        assert_eq!(norm_hash("x = 1"), norm_hash("x=1"));
        assert_ne!(norm_hash("x = 1"), norm_hash("x = 2"));
        assert_eq!(norm_hash("for x in y result += x"), norm_hash("for x in y  result += x"));
    }

    #[test]
    fn labels_both_forms() {
        let l = Labels::parse(r#"{"a": true, "b": {"useful": false, "rationale": "sorts for nothing"}}"#, "l").unwrap();
        assert_eq!(l.useful["a"], true);
        assert_eq!(l.useful["b"], false);
        assert_eq!(Labels::parse(&l.to_json(), "l").unwrap(), l);
    }

    #[test]
    fn empty_summary() {
        let r = summarize("x", 1, &[]);
        assert_eq!((r.v, r.v_c, r.v_u, r.v_a), (0, 0, 0, 0));
    }

    #[test]
    fn audit_rejects_backwards() {
        let v = Variant {
            id: "a".into(),
            code: "x = 1".into(),
            cpat_id: "c".into(),
            temperature: 0.5,
            prompt_iteration: 1,
            feedback_iteration: 0,
            feedback_parent: None,
            status: VariantStatus::Raw,
            norm_hash: norm_hash("x = 1"),
        };
        let ok = vec![
            Event::Created { unit: "u".into(), variant: v.clone() },
            Event::Transition { id: "a".into(), from: VariantStatus::Raw, to: VariantStatus::Correct },
            Event::Transition { id: "a".into(), from: VariantStatus::Correct, to: VariantStatus::Useful },
        ];
        audit_ladder(&ok).unwrap();
        let mut bad = ok.clone();
        bad.push(Event::Transition { id: "a".into(), from: VariantStatus::Useful, to: VariantStatus::Correct });
        assert!(audit_ladder(&bad).is_err());
    }
}
