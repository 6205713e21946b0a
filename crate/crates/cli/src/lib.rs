//! Subcommand implementations behind the `morphweave` binary. Each command
//! is a method on [`App`] so tests can drive it without spawning a process.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use morphweave::applier::{self, OverlapPolicy, PatchSet, TypeEnv};
use morphweave::config::RunConfig;
use morphweave::cpat::{self, natural_key, Cpat};
use morphweave::harness::{self, Harness, InProcessSandbox, ProcessSandbox, Sandbox, TestStatus};
use morphweave::llm::{Gateway, HttpProvider, Mode};
use morphweave::pipeline::{self, Checkpoint, ExpansionReport, Expander, Labels};
use morphweave::rulegen::{self, RulegenReport};
use morphweave::store;
use morphweave::tuner::{self, CurveKind, OracleSet, TuneReport};

#[derive(Parser, Debug)]
#[command(name = "morphweave", version, about = "Learn Python rewrite rules from one example and apply them")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalOpts {
    /// Run configuration (TOML).
    #[arg(long, global = true, default_value = "morphweave.toml")]
    pub config: PathBuf,
    /// Serve completions from the replay cache only (the default).
    #[arg(long, global = true, conflicts_with = "record")]
    pub replay_only: bool,
    /// Fetch cache misses from the provider and record them.
    #[arg(long, global = true)]
    pub record: bool,
    /// With --record, replace existing cache entries.
    #[arg(long, global = true, requires = "record")]
    pub overwrite: bool,
    /// Worker threads (overrides the config).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Recorded in reports; outputs are ordered deterministically regardless.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate, validate and classify variants of each CPAT.
    Expand {
        /// CPAT ids; all when omitted.
        #[arg(long = "cpat")]
        cpats: Vec<String>,
        /// Print the plan and write nothing.
        #[arg(long)]
        dry_run: bool,
        /// Ignore and truncate the checkpoint log.
        #[arg(long)]
        fresh: bool,
    },
    /// Generate and validate the unit tests used to check variants.
    GenTests {
        #[arg(long = "cpat")]
        cpats: Vec<String>,
    },
    /// Synthesize rule files from Applicable variants.
    Synth {
        #[arg(long = "cpat")]
        cpats: Vec<String>,
    },
    /// Apply rules to a codebase.
    Apply(ApplyOpts),
    /// Pick the test-generation temperature and iteration count.
    Tune {
        /// Oracle directory (overrides the config).
        #[arg(long)]
        oracle: Option<PathBuf>,
        /// Improvement threshold (overrides the config).
        #[arg(long)]
        delta: Option<f64>,
    },
    /// Summarize variant stores and iteration curves.
    Report,
    /// Run sandbox jobs from stdin, one JSON object per line.
    #[command(hide = true)]
    SandboxServe {
        #[arg(long)]
        jobs_from_stdin: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct ApplyOpts {
    /// Root of the codebase to scan.
    #[arg(long)]
    pub target: PathBuf,
    /// Rule directories; defaults to the configured rule dir of each CPAT.
    #[arg(long = "rules")]
    pub rules: Vec<PathBuf>,
    /// Restrict the default rule dirs to these CPATs.
    #[arg(long = "cpat")]
    pub cpats: Vec<String>,
    /// Use only the rules synthesized from the human examples.
    #[arg(long)]
    pub baseline: bool,
    /// Write patched files in place.
    #[arg(long)]
    pub write: bool,
    /// Write {rule_id: count} JSON here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Type stub file (overrides the config).
    #[arg(long)]
    pub stubs: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub overlap: Option<OverlapArg>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum OverlapArg {
    FirstRuleWins,
    LongestSite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GatewayChoice {
    ReplayOnly,
    Record { overwrite: bool },
}

impl GlobalOpts {
    pub fn gateway_choice(&self) -> GatewayChoice {
        if self.record {
            GatewayChoice::Record {
                overwrite: self.overwrite,
            }
        } else {
            GatewayChoice::ReplayOnly
        }
    }
}

pub struct App {
    pub cfg: RunConfig,
    pub gateway_choice: GatewayChoice,
    pub seed: u64,
    pub cancel: Arc<AtomicBool>,
    sandbox: Box<dyn Sandbox>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TestGenSummary {
    pub cpat_id: String,
    pub total: usize,
    pub valid: usize,
    pub by_status: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlannedUnit {
    pub unit: String,
    pub cached: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionPlan {
    pub cpat_id: String,
    pub prompt_units: Vec<PlannedUnit>,
    pub max_feedback_rounds: u32,
    pub tests_available: usize,
    pub variant_store: PathBuf,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub cpats: Vec<ExpansionReport>,
    pub total_v: usize,
    pub total_v_c: usize,
    pub total_v_u: usize,
    pub total_v_a: usize,
    pub mean_v_a: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curves: Option<CurveSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveSummary {
    /// Mean cumulative prompt-phase ratio at t = 0 for i = 1, 2, 3.
    pub prompt_mean_t0: Vec<f64>,
    /// Hodges-Lehmann estimates of successive prompt-curve differences at t = 0.5.
    pub prompt_hl_t05: Vec<f64>,
    /// Same for the not-useful feedback curve, i = 2..5.
    pub feedback_hl_t05: Vec<f64>,
}

impl App {
    pub fn new(cfg: RunConfig, gateway_choice: GatewayChoice, seed: u64) -> Result<App> {
        let sandbox: Box<dyn Sandbox> = if cfg.sandbox.command.is_empty() {
            Box::new(InProcessSandbox)
        } else {
            Box::new(ProcessSandbox::new(cfg.sandbox.command.clone())?)
        };
        Ok(App {
            cfg,
            gateway_choice,
            seed,
            cancel: Arc::new(AtomicBool::new(false)),
            sandbox,
        })
    }

    pub fn from_opts(opts: &GlobalOpts) -> Result<App> {
        let mut cfg = RunConfig::load(&opts.config)?;
        if let Some(w) = opts.workers {
            cfg.workers = w;
        }
        App::new(cfg, opts.gateway_choice(), opts.seed)
    }

    pub fn gateway(&self) -> Result<Gateway> {
        let cache = &self.cfg.paths.replay_cache;
        match self.gateway_choice {
            GatewayChoice::ReplayOnly => {
                if cache.exists() {
                    Ok(Gateway::open_replay(cache)?)
                } else {
                    log::warn!("no replay cache at {}; every call will miss", cache.display());
                    Ok(Gateway::replay(Default::default()))
                }
            }
            GatewayChoice::Record { overwrite } => {
                let p = &self.cfg.provider;
                let (Some(url), Some(model)) = (&p.base_url, &p.model) else {
                    bail!("--record needs provider.base_url and provider.model in the config");
                };
                let provider = HttpProvider::from_env(url, model)?;
                Ok(Gateway::with_provider(
                    Box::new(provider),
                    Mode::Record { overwrite },
                    Some(cache),
                )?)
            }
        }
    }

    pub fn harness(&self) -> Harness<'_> {
        let mut h = Harness::new(self.sandbox.as_ref());
        h.timeout_ms = self.cfg.test_gen.timeout_ms;
        h.memory_limit_mb = self.cfg.test_gen.memory_limit_mb;
        h
    }

    pub fn all_cpats(&self) -> Result<Vec<Cpat>> {
        Ok(cpat::load_dir(&self.cfg.paths.cpats)?)
    }

    /// The named CPATs, or all of them.
    pub fn cpats(&self, ids: &[String]) -> Result<Vec<Cpat>> {
        let all = self.all_cpats()?;
        if ids.is_empty() {
            return Ok(all);
        }
        ids.iter()
            .map(|id| Ok(cpat::find(&all, id)?.clone()))
            .collect()
    }

    fn interrupted(&self) -> Result<()> {
        if self.cancel.load(Ordering::SeqCst) {
            bail!(pipeline::PipelineError::Interrupted);
        }
        Ok(())
    }

    pub fn gen_tests(&self, ids: &[String]) -> Result<Vec<TestGenSummary>> {
        let gw = self.gateway()?;
        let h = self.harness();
        let mut out = Vec::new();
        for c in self.cpats(ids)? {
            self.interrupted()?;
            let tests = pipeline::generate_test_suite(&gw, &h, &c, self.cfg.test_gen.temperature, self.cfg.test_gen.iterations);
            gw.flush()?;
            let tests = tests?;
            let mut by_status = BTreeMap::new();
            for t in &tests {
                *by_status.entry(format!("{:?}", t.status)).or_insert(0) += 1;
            }
            pipeline::save_tests(&self.cfg.test_store(&c.id), &tests)?;
            out.push(TestGenSummary {
                cpat_id: c.id.clone(),
                total: tests.len(),
                valid: tests.iter().filter(|t| t.status == TestStatus::Valid).count(),
                by_status,
            });
        }
        Ok(out)
    }

    fn labels(&self) -> Result<Option<Labels>> {
        match &self.cfg.expansion.usefulness_labels {
            Some(p) => Ok(Some(Labels::load(p)?)),
            None => Ok(None),
        }
    }

    pub fn plan(&self, ids: &[String]) -> Result<Vec<ExpansionPlan>> {
        let gw = self.gateway()?;
        let mut out = Vec::new();
        for c in self.cpats(ids)? {
            let e = &self.cfg.expansion;
            let mut prompt_units = Vec::new();
            for &t in &e.temperatures {
                for i in 1..=e.prompt_iterations {
                    prompt_units.push(PlannedUnit {
                        unit: format!("{}|t={}|p={}", c.id, t, i),
                        cached: gw.has_variants_cached(&c, t, i),
                    });
                }
            }
            let store = self.cfg.test_store(&c.id);
            let tests_available = if store.exists() {
                pipeline::load_tests(&store)?
                    .iter()
                    .filter(|t| t.status == TestStatus::Valid)
                    .count()
            } else {
                0
            };
            out.push(ExpansionPlan {
                cpat_id: c.id.clone(),
                prompt_units,
                max_feedback_rounds: e.feedback_iterations,
                tests_available,
                variant_store: self.cfg.variant_store(&c.id),
            });
        }
        Ok(out)
    }

    pub fn expand(&self, ids: &[String], fresh: bool) -> Result<Vec<ExpansionReport>> {
        let cpats = self.cpats(ids)?;
        let gw = self.gateway()?;
        let h = self.harness();
        let labels = self.labels()?;
        let mut ex = Expander::new(&gw, &h);
        ex.labels = labels.as_ref();
        ex.cancel = Some(&self.cancel);
        let ckpt_path = &self.cfg.paths.checkpoint;
        if fresh && ckpt_path.exists() {
            std::fs::remove_file(ckpt_path).with_context(|| format!("removing {}", ckpt_path.display()))?;
        }
        if let Some(d) = ckpt_path.parent() {
            std::fs::create_dir_all(d)?;
        }
        let mut ckpt = Checkpoint::open(ckpt_path)?;
        let mut reports = Vec::new();
        let mut seen = Vec::new();
        for c in &cpats {
            let store = self.cfg.test_store(&c.id);
            if !store.exists() {
                bail!("no tests for {} at {}; run gen-tests first", c.id, store.display());
            }
            let tests = pipeline::load_tests(&store)?;
            let res = ex.expand(c, &self.cfg.expansion, &tests, Some(&mut ckpt));
            // Recorded completions survive an interrupted or failed run.
            gw.flush()?;
            let (variants, report) = res?;
            pipeline::save_variants(&self.cfg.variant_store(&c.id), &variants)?;
            write_json(&self.cfg.paths.reports.join(format!("expansion-{}.json", c.id)), &report)?;
            reports.push(report);
            seen.extend(variants);
        }
        if let (Some(l), true) = (&labels, ids.is_empty()) {
            let unknown = pipeline::unknown_labels(&seen, l);
            if !unknown.is_empty() {
                log::warn!("{} labels match no generated variant", unknown.len());
            }
        }
        Ok(reports)
    }

    pub fn synth(&self, ids: &[String]) -> Result<Vec<RulegenReport>> {
        let gw = self.gateway()?;
        let mut out = Vec::new();
        for c in self.cpats(ids)? {
            self.interrupted()?;
            let store = self.cfg.variant_store(&c.id);
            let variants = pipeline::load_variants(&store)
                .with_context(|| format!("loading variants of {}", c.id))?;
            let res = rulegen::synthesize_rules(&gw, &c, &variants);
            gw.flush()?;
            let (rules, report) = res?;
            rulegen::write_rule_dir(&self.cfg.rule_dir(&c.id), &rules)?;
            out.push(report);
        }
        write_json(&self.cfg.paths.reports.join("synth.json"), &out)?;
        Ok(out)
    }

    pub fn rule_dirs(&self, opts: &ApplyOpts) -> Result<Vec<PathBuf>> {
        if !opts.rules.is_empty() {
            return Ok(opts.rules.clone());
        }
        let ids: Vec<String> = if opts.cpats.is_empty() {
            let mut ids: Vec<String> = std::fs::read_dir(&self.cfg.paths.rules)
                .with_context(|| format!("reading {}", self.cfg.paths.rules.display()))?
                .filter_map(|e| e.ok())
                .filter(|e| e.path().is_dir())
                .map(|e| e.file_name().to_string_lossy().to_string())
                .collect();
            ids.sort_by_key(|s| natural_key(s));
            ids
        } else {
            opts.cpats.clone()
        };
        Ok(ids.iter().map(|id| self.cfg.rule_dir(id)).collect())
    }

    pub fn apply(&self, opts: &ApplyOpts) -> Result<PatchSet> {
        let mut rules = Vec::new();
        for d in self.rule_dirs(opts)? {
            rules.extend(applier::load_rule_dir(&d)?);
        }
        if opts.baseline {
            rules.retain(|r| rulegen::is_human_rule(&r.rule_id));
        }
        if rules.is_empty() {
            bail!(applier::ApplyError::NoRules("no rule files found".into()));
        }
        let mut env = TypeEnv::from_cpats(&self.all_cpats().unwrap_or_default());
        if let Some(s) = opts.stubs.as_ref().or(self.cfg.paths.type_stubs.as_ref()) {
            env.load_stubs(s)?;
        }
        let policy = match opts.overlap {
            Some(OverlapArg::FirstRuleWins) => OverlapPolicy::FirstRuleWins,
            Some(OverlapArg::LongestSite) => OverlapPolicy::LongestSite,
            None => self.cfg.apply.overlap,
        };
        let set = applier::scan(&rules, &opts.target, &env, policy)?;
        if let Some(r) = &opts.report {
            store::write_atomic(r, format!("{}\n", set.report_json()).as_bytes())
                .with_context(|| format!("writing {}", r.display()))?;
        }
        if opts.write {
            applier::write_patches(&set, &opts.target)?;
        }
        Ok(set)
    }

    pub fn tune(&self, oracle: Option<&Path>, delta: Option<f64>) -> Result<TuneReport> {
        let oracle_dir = oracle.unwrap_or(&self.cfg.paths.oracle);
        let oracle = OracleSet::load_dir(oracle_dir)?;
        let mut cfg = self.cfg.tune.clone();
        if let Some(d) = delta {
            if !(d > 0.0) {
                bail!("delta must be positive");
            }
            cfg.delta = d;
        }
        let ids: Vec<String> = oracle.cpats.iter().map(|c| c.cpat_id.clone()).collect();
        let cpats = self.cpats(&ids)?;
        let gw = self.gateway()?;
        let h = self.harness();
        let res = tuner::tune(&gw, &h, &cpats, &oracle, &cfg);
        gw.flush()?;
        let report = res?;
        let dir = &self.cfg.paths.reports;
        std::fs::create_dir_all(dir)?;
        store::write_atomic(&dir.join("tune-grid.csv"), report.grid_csv().as_bytes())?;
        write_json(&dir.join("tune.json"), &report)?;
        Ok(report)
    }

    pub fn report(&self) -> Result<Summary> {
        let mut cpats = Vec::new();
        for c in self.all_cpats()? {
            let p = self.cfg.variant_store(&c.id);
            if !p.exists() {
                continue;
            }
            let vs = pipeline::load_variants(&p)?;
            cpats.push(pipeline::summarize(&c.id, c.human_examples, &vs));
        }
        let sum = |f: fn(&ExpansionReport) -> usize| cpats.iter().map(f).sum::<usize>();
        let total_v_a = sum(|r| r.v_a);
        let curves = if self.cfg.paths.oracle.is_dir() {
            Some(curve_summary(&OracleSet::load_dir(&self.cfg.paths.oracle)?)?)
        } else {
            None
        };
        let s = Summary {
            seed: self.seed,
            total_v: sum(|r| r.v),
            total_v_c: sum(|r| r.v_c),
            total_v_u: sum(|r| r.v_u),
            total_v_a,
            mean_v_a: if cpats.is_empty() { 0.0 } else { total_v_a as f64 / cpats.len() as f64 },
            cpats,
            curves,
        };
        write_json(&self.cfg.paths.reports.join("summary.json"), &s)?;
        Ok(s)
    }
}

pub fn curve_summary(oracle: &OracleSet) -> Result<CurveSummary> {
    let prompt = tuner::iteration_curves(oracle, CurveKind::Prompt)?;
    let feedback = tuner::iteration_curves(oracle, CurveKind::Feedback)?;
    Ok(CurveSummary {
        prompt_mean_t0: (1..=3).map(|i| tuner::mean_at(&prompt, 0.0, i)).collect(),
        prompt_hl_t05: tuner::successive_differences(&prompt, 0.5, &[1, 2, 3, 4])?,
        feedback_hl_t05: tuner::successive_differences(&feedback, 0.5, &[2, 3, 4, 5])?,
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    if let Some(d) = path.parent() {
        std::fs::create_dir_all(d)?;
    }
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    store::write_atomic(path, s.as_bytes()).with_context(|| format!("writing {}", path.display()))
}

pub fn expansion_table(reports: &[ExpansionReport]) -> String {
    let mut s = format!("{:<10} {:>6} {:>6} {:>6} {:>6}\n", "cpat", "V", "V_c", "V_u", "V_a");
    for r in reports {
        s.push_str(&format!("{:<10} {:>6} {:>6} {:>6} {:>6}\n", r.cpat_id, r.v, r.v_c, r.v_u, r.v_a));
    }
    s
}

/// What `main` should do after a command: print `stdout`, exit with `code`.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if let Command::SandboxServe { jobs_from_stdin } = &cli.command {
        if !jobs_from_stdin {
            bail!("sandbox-serve reads jobs from stdin; pass --jobs-from-stdin");
        }
        let stdin = std::io::stdin();
        harness::serve(stdin.lock(), std::io::stdout().lock(), &InProcessSandbox)?;
        return Ok(Outcome {
            stdout: String::new(),
            code: 0,
        });
    }
    let app = App::from_opts(&cli.global)?;
    if app.cfg.workers > 0 {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(app.cfg.workers).build_global();
    }
    let cancel = app.cancel.clone();
    let _ = ctrlc::set_handler(move || {
        eprintln!("interrupt: finishing the current unit");
        cancel.store(true, Ordering::SeqCst);
    });
    let json = |v: &dyn erased::Json| v.to_json();
    let (stdout, code) = match &cli.command {
        Command::Expand { cpats, dry_run, fresh } => {
            if *dry_run {
                (json(&app.plan(cpats)?), 0)
            } else {
                let r = app.expand(cpats, *fresh)?;
                (expansion_table(&r), 0)
            }
        }
        Command::GenTests { cpats } => (json(&app.gen_tests(cpats)?), 0),
        Command::Synth { cpats } => (json(&app.synth(cpats)?), 0),
        Command::Apply(opts) => {
            let set = app.apply(opts)?;
            let code = if set.total() > 0 { 2 } else { 0 };
            let out = if opts.write {
                format!("{} sites rewritten in {} files\n", set.total(), set.files.len())
            } else {
                set.unified_diff()
            };
            (out, code)
        }
        Command::Tune { oracle, delta } => {
            let r = app.tune(oracle.as_deref(), *delta)?;
            (
                format!(
                    "selected t = {} i = {} (F = {:.4}, precision = {:.4}, recall = {:.4})\n",
                    r.selected_t, r.selected_i, r.f_measure, r.precision, r.recall
                ),
                0,
            )
        }
        Command::Report => {
            let s = app.report()?;
            let mut out = expansion_table(&s.cpats);
            out.push_str(&format!("mean V_a = {:.1}\n", s.mean_v_a));
            (out, 0)
        }
        Command::SandboxServe { .. } => unreachable!(),
    };
    Ok(Outcome { stdout, code })
}

mod erased {
    pub trait Json {
        fn to_json(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn to_json(&self) -> String {
            let mut s = serde_json::to_string_pretty(self).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// Machine-readable error for stderr.
pub fn error_json(e: &anyhow::Error) -> String {
    let kind = if e.downcast_ref::<morphweave::config::ConfigError>().is_some() {
        "config"
    } else if e.downcast_ref::<morphweave::llm::GatewayError>().is_some() {
        "gateway"
    } else if e.downcast_ref::<morphweave::cpat::CpatError>().is_some() {
        "cpat"
    } else if e.downcast_ref::<pipeline::PipelineError>().is_some() {
        "pipeline"
    } else if e.downcast_ref::<applier::ApplyError>().is_some() {
        "apply"
    } else if e.downcast_ref::<tuner::TunerError>().is_some() {
        "tune"
    } else if e.downcast_ref::<morphweave::store::StoreError>().is_some() {
        "store"
    } else {
        "error"
    };
    let chain: Vec<String> = e.chain().map(|c| c.to_string()).collect();
    serde_json::json!({"error": kind, "message": e.to_string(), "causes": chain}).to_string()
}
