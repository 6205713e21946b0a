//! Run configuration, read from TOML. Relative paths resolve against the
//! directory holding the config file.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::applier::OverlapPolicy;
use crate::pipeline::ExpansionConfig;
use crate::tuner::TuneConfig;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config {path}: {message}")]
    Read { path: String, message: String },
    #[error("config: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Paths {
    pub cpats: PathBuf,
    pub variants: PathBuf,
    pub tests: PathBuf,
    pub rules: PathBuf,
    pub replay_cache: PathBuf,
    pub oracle: PathBuf,
    pub reports: PathBuf,
    pub checkpoint: PathBuf,
    pub labels: Option<PathBuf>,
    pub type_stubs: Option<PathBuf>,
}

impl Default for Paths {
    fn default() -> Self {
        Paths {
            cpats: "cpats".into(),
            variants: "out/variants".into(),
            tests: "out/tests".into(),
            rules: "out/rules".into(),
            replay_cache: "replay/cache.json".into(),
            oracle: "oracle".into(),
            reports: "out/reports".into(),
            checkpoint: "out/checkpoint.jsonl".into(),
            labels: None,
            type_stubs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TestGenConfig {
    pub temperature: f64,
    pub iterations: u32,
    pub timeout_ms: u64,
    pub memory_limit_mb: u64,
}

impl Default for TestGenConfig {
    fn default() -> Self {
        TestGenConfig {
            temperature: 1.2,
            iterations: 5,
            timeout_ms: crate::harness::DEFAULT_TIMEOUT_MS,
            memory_limit_mb: crate::harness::DEFAULT_MEMORY_MB,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ProviderConfig {
    pub base_url: Option<String>,
    pub model: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SandboxConfig {
    /// External runner command; empty means the in-process evaluator.
    pub command: Vec<String>,
}

impl Default for SandboxConfig {
    fn default() -> Self {
        SandboxConfig { command: Vec::new() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ApplyConfig {
    pub overlap: OverlapPolicy,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub paths: Paths,
    pub expansion: ExpansionConfig,
    pub test_gen: TestGenConfig,
    pub provider: ProviderConfig,
    pub sandbox: SandboxConfig,
    pub tune: TuneConfig,
    pub apply: ApplyConfig,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
}

impl RunConfig {
    pub fn parse(text: &str, base: &Path) -> Result<RunConfig, ConfigError> {
        let mut c: RunConfig = toml::from_str(text).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        c.resolve(base);
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        RunConfig::parse(&text, base).map_err(|e| match e {
            ConfigError::Invalid(m) => ConfigError::Read {
                path: path.display().to_string(),
                message: m,
            },
            e => e,
        })
    }

    fn resolve(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        let p = &mut self.paths;
        for x in [
            &mut p.cpats,
            &mut p.variants,
            &mut p.tests,
            &mut p.rules,
            &mut p.replay_cache,
            &mut p.oracle,
            &mut p.reports,
            &mut p.checkpoint,
        ] {
            fix(x);
        }
        if let Some(l) = p.labels.as_mut() {
            fix(l);
        }
        if let Some(s) = p.type_stubs.as_mut() {
            fix(s);
        }
        if let Some(l) = self.expansion.usefulness_labels.as_mut() {
            fix(l);
        }
        if self.expansion.usefulness_labels.is_none() {
            self.expansion.usefulness_labels = p.labels.clone();
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.expansion
            .validate()
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        if !(0.0..=2.0).contains(&self.test_gen.temperature) || self.test_gen.iterations < 1 {
            return Err(ConfigError::Invalid("test_gen needs t in [0, 2] and at least one iteration".into()));
        }
        if self.tune.delta <= 0.0 || self.tune.max_iteration < 1 || self.tune.temperatures.is_empty() {
            return Err(ConfigError::Invalid("tune needs delta > 0, max_iteration >= 1 and temperatures".into()));
        }
        Ok(())
    }

    pub fn variant_store(&self, cpat_id: &str) -> PathBuf {
        self.paths.variants.join(format!("{}.jsonl", cpat_id))
    }

    pub fn test_store(&self, cpat_id: &str) -> PathBuf {
        self.paths.tests.join(format!("{}.jsonl", cpat_id))
    }

    pub fn rule_dir(&self, cpat_id: &str) -> PathBuf {
        self.paths.rules.join(cpat_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_resolution() {
        let c = RunConfig::parse("[paths]\ncpats = \"c\"\nlabels = \"l.json\"\n", Path::new("/w")).unwrap();
        assert_eq!(c.paths.cpats, PathBuf::from("/w/c"));
        assert_eq!(c.expansion.usefulness_labels, Some(PathBuf::from("/w/l.json")));
        assert_eq!(c.test_gen.temperature, 1.2);
        assert_eq!(c.test_gen.iterations, 5);
        assert_eq!(c.expansion.temperatures, vec![0.5, 0.7]);
        assert_eq!((c.expansion.prompt_iterations, c.expansion.feedback_iterations), (3, 5));
        assert!(RunConfig::parse("[expansion]\nprompt_iterations = 0\n", Path::new("/")).is_err());
        assert!(RunConfig::parse("[nonsense\n", Path::new("/")).is_err());
    }
}
