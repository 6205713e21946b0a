//! Completion client with few-shot prompt construction and a record/replay cache.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cpat::Cpat;
use crate::harness::wrapper_name;
use crate::syntax::{Origin, SourceFragment};

pub const API_KEY_ENV: &str = "MORPHWEAVE_LLM_KEY";
pub const CACHE_FORMAT_VERSION: u32 = 1;

const VARIANT_TEMPLATE: &str = include_str!("../prompts/variant_gen.txt");
const TEST_TEMPLATE: &str = include_str!("../prompts/test_gen.txt");
const TYPE_TEMPLATE: &str = include_str!("../prompts/type_infer.txt");
const IMPORT_TEMPLATE: &str = include_str!("../prompts/import_infer.txt");

#[derive(Debug, thiserror::Error)]
pub enum GatewayError {
    #[error("provider error: {0}")]
    Provider(String),
    #[error("no cached completion for key {0}")]
    CacheMiss(String),
    #[error("completion violates the output contract: {0}")]
    Format(String),
    #[error("cache file {path}: {message}")]
    Cache { path: String, message: String },
    #[error("key {0} is already recorded")]
    AlreadyRecorded(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PromptKind {
    VariantGen,
    TestGen,
    TypeInfer,
    ImportInfer,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PromptSpec {
    pub kind: PromptKind,
    pub cpat_id: String,
    pub payload: String,
    pub few_shot: Vec<(String, String)>,
    pub temperature: f64,
    pub iteration_index: u32,
    /// Applicable variant fed back in a feedback iteration.
    pub seed: Option<String>,
}

const SUM_LOOP: &str = "result = 0\nfor elem in elements:\n    result = elem + result";
const INDEXED_LOOP: &str = "result = 0\nfor i in range(len(elements)):\n    result += elements[i]";
const PREFIX_SUM: &str = "temp_list = [0] + elements\nfor i in range(1, len(temp_list)):\n    temp_list[i] += temp_list[i - 1]\nresult = temp_list[-1]";

/// The two exemplar pairs: a syntactic variation and a data-flow variation.
pub fn variant_exemplars() -> Vec<(String, String)> {
    vec![
        (SUM_LOOP.to_string(), INDEXED_LOOP.to_string()),
        (SUM_LOOP.to_string(), PREFIX_SUM.to_string()),
    ]
}

pub fn test_exemplars() -> Vec<(String, String)> {
    vec![
        (
            SUM_LOOP.to_string(),
            "elements = [1, 2, 3]\nassert f(elements) == 6".to_string(),
        ),
        (
            SUM_LOOP.to_string(),
            "elements = [2, 3, 4]\nassert f(elements) == 9".to_string(),
        ),
    ]
}

impl PromptSpec {
    pub fn new(kind: PromptKind, cpat: &Cpat, payload: &str, temperature: f64, iteration_index: u32) -> PromptSpec {
        let few_shot = match kind {
            PromptKind::VariantGen => variant_exemplars(),
            PromptKind::TestGen => test_exemplars(),
            _ => Vec::new(),
        };
        PromptSpec {
            kind,
            cpat_id: cpat.id.clone(),
            payload: payload.to_string(),
            few_shot,
            temperature,
            iteration_index,
            seed: None,
        }
    }

    pub fn validate(&self) -> Result<(), GatewayError> {
        if !(0.0..=2.0).contains(&self.temperature) {
            return Err(GatewayError::Provider(format!("temperature {} outside [0, 2]", self.temperature)));
        }
        if matches!(self.kind, PromptKind::VariantGen | PromptKind::TestGen) && self.few_shot.len() != 2 {
            return Err(GatewayError::Provider("generation prompts need exactly two exemplars".into()));
        }
        if self.iteration_index < 1 {
            return Err(GatewayError::Provider("iteration index starts at 1".into()));
        }
        Ok(())
    }

    pub fn render(&self, cpat: &Cpat) -> String {
        let (template, tag) = match self.kind {
            PromptKind::VariantGen => (VARIANT_TEMPLATE, "VARIANT"),
            PromptKind::TestGen => (TEST_TEMPLATE, "TEST"),
            PromptKind::TypeInfer => (TYPE_TEMPLATE, ""),
            PromptKind::ImportInfer => (IMPORT_TEMPLATE, ""),
        };
        let mut examples = String::new();
        for (i, (input, output)) in self.few_shot.iter().enumerate() {
            examples.push_str(&format!(
                "Example {}\nInput:\n```\n{}\n```\nOutput:\n```{}\n{}\n```\n\n",
                i + 1,
                input,
                tag,
                output
            ));
        }
        let seed = match &self.seed {
            Some(s) => format!("A fragment already known to be equivalent:\n```\n{}\n```\n", s),
            None => String::new(),
        };
        let inputs: Vec<&str> = cpat.input_vars.iter().map(|v| v.name.as_str()).collect();
        let input_types: Vec<String> = cpat.input_vars.iter().map(|v| format!("{}: {}", v.name, v.ty)).collect();
        template
            .replace("{{examples}}", &examples)
            .replace("{{payload}}", &self.payload)
            .replace("{{seed}}", &seed)
            .replace("{{inputs}}", &inputs.join(", "))
            .replace("{{input_types}}", &input_types.join(", "))
            .replace("{{outputs}}", &cpat.output_vars.join(", "))
            .replace("{{wrapper}}", wrapper_name(cpat))
    }
}

/// SHA-256 over prompt, temperature and iteration, NUL separated, hex encoded.
pub fn cache_key(prompt: &str, temperature: f64, iteration_index: u32) -> String {
    let mut h = Sha256::new();
    h.update(prompt.as_bytes());
    h.update([0u8]);
    h.update(format!("{}", temperature).as_bytes());
    h.update([0u8]);
    h.update(format!("{}", iteration_index).as_bytes());
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletionRecord {
    pub cache_key: String,
    pub raw_text: String,
    pub provider_id: String,
    pub timestamp: u64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ReplayCache {
    pub format_version: u32,
    pub records: BTreeMap<String, CompletionRecord>,
}

impl ReplayCache {
    pub fn new() -> ReplayCache {
        ReplayCache {
            format_version: CACHE_FORMAT_VERSION,
            records: BTreeMap::new(),
        }
    }

    pub fn load(path: &Path) -> Result<ReplayCache, GatewayError> {
        let err = |message: String| GatewayError::Cache {
            path: path.display().to_string(),
            message,
        };
        let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
        let c: ReplayCache = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
        if c.format_version > CACHE_FORMAT_VERSION {
            return Err(err(format!(
                "format version {} is newer than supported version {}",
                c.format_version, CACHE_FORMAT_VERSION
            )));
        }
        Ok(c)
    }

    pub fn save(&self, path: &Path) -> Result<(), GatewayError> {
        let text = serde_json::to_string_pretty(self).expect("cache serializes");
        crate::store::write_atomic(path, text.as_bytes()).map_err(|e| GatewayError::Cache {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    pub fn insert(&mut self, rec: CompletionRecord, overwrite: bool) -> Result<(), GatewayError> {
        if !overwrite && self.records.contains_key(&rec.cache_key) {
            return Err(GatewayError::AlreadyRecorded(rec.cache_key));
        }
        self.records.insert(rec.cache_key.clone(), rec);
        Ok(())
    }
}

pub trait Provider: Send + Sync {
    fn id(&self) -> String;
    fn complete(&self, prompt: &str, temperature: f64) -> Result<String, GatewayError>;
}

/// OpenAI-style chat-completion endpoint.
pub struct HttpProvider {
    pub base_url: String,
    pub model: String,
    api_key: String,
    client: reqwest::blocking::Client,
}

impl HttpProvider {
    pub fn from_env(base_url: &str, model: &str) -> Result<HttpProvider, GatewayError> {
        let api_key = std::env::var(API_KEY_ENV)
            .map_err(|_| GatewayError::Provider(format!("{} is not set", API_KEY_ENV)))?;
        Ok(HttpProvider::new(base_url, model, &api_key))
    }

    pub fn new(base_url: &str, model: &str, api_key: &str) -> HttpProvider {
        HttpProvider {
            base_url: base_url.trim_end_matches('/').to_string(),
            model: model.to_string(),
            api_key: api_key.to_string(),
            client: reqwest::blocking::Client::new(),
        }
    }
}

impl Provider for HttpProvider {
    fn id(&self) -> String {
        format!("http:{}", self.model)
    }

    fn complete(&self, prompt: &str, temperature: f64) -> Result<String, GatewayError> {
        let body = serde_json::json!({
            "model": self.model,
            "temperature": temperature,
            "messages": [{"role": "user", "content": prompt}],
        });
        let resp = self
            .client
            .post(format!("{}/chat/completions", self.base_url))
            .bearer_auth(&self.api_key)
            .json(&body)
            .send()
            .map_err(|e| GatewayError::Provider(e.to_string()))?;
        let status = resp.status();
        let v: serde_json::Value = resp.json().map_err(|e| GatewayError::Provider(e.to_string()))?;
        if !status.is_success() {
            return Err(GatewayError::Provider(format!("HTTP {}: {}", status, v)));
        }
        v["choices"][0]["message"]["content"]
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| GatewayError::Provider("response has no message content".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Serve from the cache only.
    ReplayOnly,
    /// Serve hits from the cache, fetch misses from the provider and record them.
    Record { overwrite: bool },
    /// Always ask the provider; never touch the cache.
    Live,
}

pub struct Gateway {
    provider: Option<Box<dyn Provider>>,
    cache: RwLock<ReplayCache>,
    cache_path: Option<PathBuf>,
    mode: Mode,
    dirty: Mutex<bool>,
    clock: fn() -> u64,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl Gateway {
    pub fn replay(cache: ReplayCache) -> Gateway {
        Gateway {
            provider: None,
            cache: RwLock::new(cache),
            cache_path: None,
            mode: Mode::ReplayOnly,
            dirty: Mutex::new(false),
            clock: now,
        }
    }

    pub fn open_replay(path: &Path) -> Result<Gateway, GatewayError> {
        let mut g = Gateway::replay(ReplayCache::load(path)?);
        g.cache_path = Some(path.to_path_buf());
        Ok(g)
    }

    pub fn with_provider(provider: Box<dyn Provider>, mode: Mode, cache_path: Option<&Path>) -> Result<Gateway, GatewayError> {
        let cache = match cache_path {
            Some(p) if p.exists() => ReplayCache::load(p)?,
            _ => ReplayCache::new(),
        };
        Ok(Gateway {
            provider: Some(provider),
            cache: RwLock::new(cache),
            cache_path: cache_path.map(Path::to_path_buf),
            mode,
            dirty: Mutex::new(false),
            clock: now,
        })
    }

    /// Fixes record timestamps, for reproducible cache files.
    pub fn with_clock(mut self, clock: fn() -> u64) -> Gateway {
        self.clock = clock;
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn complete(&self, spec: &PromptSpec, cpat: &Cpat) -> Result<String, GatewayError> {
        spec.validate()?;
        let prompt = spec.render(cpat);
        let key = cache_key(&prompt, spec.temperature, spec.iteration_index);
        let overwrite = match self.mode {
            Mode::ReplayOnly => {
                return self
                    .cache
                    .read()
                    .unwrap()
                    .records
                    .get(&key)
                    .map(|r| r.raw_text.clone())
                    .ok_or(GatewayError::CacheMiss(key));
            }
            Mode::Record { overwrite } => {
                if !overwrite {
                    if let Some(r) = self.cache.read().unwrap().records.get(&key) {
                        return Ok(r.raw_text.clone());
                    }
                }
                overwrite
            }
            Mode::Live => false,
        };
        let provider = self
            .provider
            .as_ref()
            .ok_or_else(|| GatewayError::Provider("no provider configured".into()))?;
        let text = provider.complete(&prompt, spec.temperature)?;
        if let Mode::Record { .. } = self.mode {
            self.cache.write().unwrap().insert(
                CompletionRecord {
                    cache_key: key,
                    raw_text: text.clone(),
                    provider_id: provider.id(),
                    timestamp: (self.clock)(),
                },
                overwrite,
            )?;
            *self.dirty.lock().unwrap() = true;
        }
        Ok(text)
    }

    /// Writes recorded completions back to the cache file, if any were added.
    pub fn flush(&self) -> Result<(), GatewayError> {
        let mut dirty = self.dirty.lock().unwrap();
        if let (true, Some(p)) = (*dirty, &self.cache_path) {
            self.cache.read().unwrap().save(p)?;
            *dirty = false;
        }
        Ok(())
    }

    pub fn snapshot(&self) -> ReplayCache {
        self.cache.read().unwrap().clone()
    }

    /// Whether the prompt-phase variant call at (t, i) is in the cache.
    pub fn has_variants_cached(&self, cpat: &Cpat, temperature: f64, iteration: u32) -> bool {
        let spec = PromptSpec::new(PromptKind::VariantGen, cpat, &cpat.lhs, temperature, iteration);
        let key = cache_key(&spec.render(cpat), temperature, iteration);
        self.cache.read().unwrap().records.contains_key(&key)
    }

    pub fn generate_variants(
        &self,
        cpat: &Cpat,
        temperature: f64,
        iteration: u32,
        seed: Option<&str>,
    ) -> Result<Vec<SourceFragment>, GatewayError> {
        let mut spec = PromptSpec::new(PromptKind::VariantGen, cpat, &cpat.lhs, temperature, iteration);
        spec.seed = seed.map(str::to_string);
        let text = self.complete(&spec, cpat)?;
        Ok(extract_blocks(&text, "VARIANT")?
            .into_iter()
            .map(|b| SourceFragment::new(b, Origin::Variant))
            .collect())
    }

    pub fn generate_tests(&self, cpat: &Cpat, temperature: f64, iteration: u32) -> Result<Vec<SourceFragment>, GatewayError> {
        let spec = PromptSpec::new(PromptKind::TestGen, cpat, &cpat.lhs, temperature, iteration);
        let text = self.complete(&spec, cpat)?;
        Ok(extract_blocks(&text, "TEST")?
            .into_iter()
            .map(|b| SourceFragment::new(b, Origin::Test))
            .collect())
    }

    pub fn infer_types(&self, variant: &str, cpat: &Cpat) -> Result<BTreeMap<String, String>, GatewayError> {
        let spec = PromptSpec::new(PromptKind::TypeInfer, cpat, variant, 0.0, 1);
        let text = self.complete(&spec, cpat)?;
        let v = extract_json(&text)?;
        let obj = v
            .as_object()
            .ok_or_else(|| GatewayError::Format("type inference must end in a JSON object".into()))?;
        let mut out = BTreeMap::new();
        for (k, t) in obj {
            let t = t
                .as_str()
                .ok_or_else(|| GatewayError::Format(format!("type of {} is not a string", k)))?;
            out.insert(k.clone(), t.to_string());
        }
        Ok(out)
    }

    pub fn infer_imports(&self, variant: &str, cpat: &Cpat) -> Result<BTreeSet<String>, GatewayError> {
        let spec = PromptSpec::new(PromptKind::ImportInfer, cpat, variant, 0.0, 1);
        let text = self.complete(&spec, cpat)?;
        let v = extract_json(&text)?;
        let list = v
            .get("imports")
            .and_then(|l| l.as_array())
            .ok_or_else(|| GatewayError::Format("import inference must give {\"imports\": [...]}".into()))?;
        list.iter()
            .map(|m| {
                m.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| GatewayError::Format("module names must be strings".into()))
            })
            .collect()
    }
}

/// Maps a format error to the empty result: a completion that breaks the
/// output contract is discarded and counts as producing nothing.
pub fn or_empty<T: Default>(r: Result<T, GatewayError>) -> Result<T, GatewayError> {
    match r {
        Err(GatewayError::Format(m)) => {
            log::warn!("discarding malformed completion: {}", m);
            Ok(T::default())
        }
        r => r,
    }
}

/// Pulls the bodies of ```TAG fenced blocks. Whitespace-only text yields no
/// blocks; any other text without a block, or an unterminated block, is a
/// format error.
pub fn extract_blocks(text: &str, tag: &str) -> Result<Vec<String>, GatewayError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let open = format!("```{}", tag);
    let mut out = Vec::new();
    let mut cur: Option<Vec<&str>> = None;
    for line in text.lines() {
        let t = line.trim_end();
        match &mut cur {
            None if t.trim_start() == open => cur = Some(Vec::new()),
            None if t.trim_start().starts_with("```") && t.trim_start() != "```" => {
                return Err(GatewayError::Format(format!("unexpected block tag {:?}", t.trim())));
            }
            None => {}
            Some(body) if t.trim_start() == "```" => {
                let code = body.join("\n");
                if code.trim().is_empty() {
                    return Err(GatewayError::Format("empty block".into()));
                }
                out.push(code);
                cur = None;
            }
            Some(body) => body.push(line),
        }
    }
    if cur.is_some() {
        return Err(GatewayError::Format("unterminated block".into()));
    }
    if out.is_empty() {
        return Err(GatewayError::Format(format!("no {} blocks", tag)));
    }
    Ok(out)
}

/// The JSON object that ends a chain-of-thought answer.
fn extract_json(text: &str) -> Result<serde_json::Value, GatewayError> {
    let end = text.rfind('}').ok_or_else(|| GatewayError::Format("no JSON object".into()))?;
    // scan candidate openings from the right so reasoning text with braces is skipped
    for (start, _) in text[..end].match_indices('{').collect::<Vec<_>>().into_iter().rev() {
        if let Ok(v) = serde_json::from_str::<serde_json::Value>(&text[start..=end]) {
            if v.is_object() {
                return Ok(v);
            }
        }
    }
    Err(GatewayError::Format("no parsable JSON object".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpat1() -> Cpat {
        Cpat::from_json(
            r#"{"id": "cpat-1", "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
            "rhs": "result = numpy.sum(elements)",
            "input_vars": [{"name": "elements", "type": "List[int]"}], "output_vars": ["result"],
            "imports": ["numpy"]}"#,
            "t",
        )
        .unwrap()
    }

    struct Canned(&'static str);

    impl Provider for Canned {
        fn id(&self) -> String {
            "canned".into()
        }
        fn complete(&self, _p: &str, _t: f64) -> Result<String, GatewayError> {
            Ok(self.0.to_string())
        }
    }

    #[test]
    fn key_is_stable() {
        assert_eq!(cache_key("p", 0.5, 1), cache_key("p", 0.5, 1));
        assert_ne!(cache_key("p", 0.5, 1), cache_key("p", 0.7, 1));
        assert_ne!(cache_key("p", 0.5, 1), cache_key("p", 0.5, 2));
        let mut h = Sha256::new();
        h.update(b"p\x000.5\x001");
        assert_eq!(cache_key("p", 0.5, 1), hex::encode(h.finalize()));
    }

    #[test]
    fn blocks() {
        let t = "```VARIANT\nx = 1\n```\nnoise\n```VARIANT\ny = 2\nz = 3\n```";
        assert_eq!(extract_blocks(t, "VARIANT").unwrap(), ["x = 1", "y = 2\nz = 3"]);
        assert!(extract_blocks("just prose", "VARIANT").is_err());
        assert!(extract_blocks("```VARIANT\nx = 1", "VARIANT").is_err());
        assert!(extract_blocks("  \n", "TEST").unwrap().is_empty());
    }

    #[test]
    fn record_then_replay() {
        let c = cpat1();
        let g = Gateway::with_provider(Box::new(Canned("```VARIANT\nresult = sum(elements)\n```")), Mode::Record { overwrite: false }, None).unwrap();
        let v = g.generate_variants(&c, 0.5, 1, None).unwrap();
        assert_eq!(v[0].text, "result = sum(elements)");
        let r = Gateway::replay(g.snapshot());
        assert_eq!(r.generate_variants(&c, 0.5, 1, None).unwrap(), v);
        assert!(matches!(r.generate_variants(&c, 0.5, 2, None), Err(GatewayError::CacheMiss(_))));
        let mut cache = g.snapshot();
        let rec = cache.records.values().next().unwrap().clone();
        assert!(matches!(cache.insert(rec.clone(), false), Err(GatewayError::AlreadyRecorded(_))));
        cache.insert(rec, true).unwrap();
    }

    #[test]
    fn inference_answers() {
        let c = cpat1();
        let g = Gateway::with_provider(
            Box::new(Canned("losses is indexed with ints {so}...\n{\"losses\": \"List[int]\", \"i\": \"int\", \"loss\": \"int\"}")),
            Mode::Live,
            None,
        )
        .unwrap();
        let t = g.infer_types("loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]", &c).unwrap();
        assert_eq!(t["losses"], "List[int]");
        assert_eq!(t.len(), 3);
        let g = Gateway::with_provider(Box::new(Canned("numpy.sum is dotted.\n{\"imports\": [\"numpy\"]}")), Mode::Live, None).unwrap();
        assert_eq!(g.infer_imports("result = numpy.sum(elements)", &c).unwrap(), BTreeSet::from(["numpy".to_string()]));
    }

    #[test]
    fn prompt_shape() {
        let c = cpat1();
        let s = PromptSpec::new(PromptKind::VariantGen, &c, &c.lhs, 0.5, 1);
        s.validate().unwrap();
        let p = s.render(&c);
        assert!(p.contains("```VARIANT\nresult = 0\nfor i in range(len(elements)):"));
        assert!(!p.contains("{{"));
        let mut bad = s.clone();
        bad.temperature = 2.5;
        assert!(bad.validate().is_err());
    }
}
