//! Lays planned variants and tests out as completions.

use std::collections::{BTreeMap, HashMap};

use morphweave::cpat::Cpat;
use morphweave::harness::{wrap_fragment, wrapper_name};
use morphweave::llm::{cache_key, CompletionRecord, GatewayError, PromptKind, PromptSpec, Provider, ReplayCache};

use crate::defs::Def;
use crate::plan::{blocks, expected, import_answer, type_answer, Class, Planned, Tests};

pub const CLOCK: u64 = 1_700_000_000;
pub const PROVIDER: &str = "fixture";
pub const EXPAND_TEMPS: [f64; 2] = [0.5, 0.7];
pub const TUNE_TEMPS: [f64; 7] = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2];

pub fn clock() -> u64 {
    CLOCK
}

/// Answers by rendered prompt; unknown variant prompts get an empty answer.
pub struct Scripted {
    pub answers: HashMap<String, String>,
}

impl Provider for Scripted {
    fn id(&self) -> String {
        PROVIDER.to_string()
    }

    fn complete(&self, prompt: &str, _temperature: f64) -> Result<String, GatewayError> {
        if let Some(a) = self.answers.get(prompt) {
            return Ok(a.clone());
        }
        if prompt.contains("```VARIANT") {
            return Ok(String::new());
        }
        Err(GatewayError::Provider(format!("no scripted answer for prompt starting {:?}", &prompt[..prompt.len().min(80)])))
    }
}

pub fn insert(cache: &mut ReplayCache, spec: &PromptSpec, cpat: &Cpat, text: String) {
    let rec = CompletionRecord {
        cache_key: cache_key(&spec.render(cpat), spec.temperature, spec.iteration_index),
        raw_text: text,
        provider_id: PROVIDER.to_string(),
        timestamp: CLOCK,
    };
    cache.insert(rec, false).expect("fresh key");
}

fn seed_prompt(cpat: &Cpat, t: f64, r: u32, seed: &str) -> String {
    let mut spec = PromptSpec::new(PromptKind::VariantGen, cpat, &cpat.lhs, t, r);
    spec.seed = Some(seed.to_string());
    spec.render(cpat)
}

/// Prompt-phase records go straight into the cache; feedback, type and
/// import answers go to the scripted provider.
pub fn lay_out(def: &Def, cpat: &Cpat, planned: &[Planned], cache: &mut ReplayCache, answers: &mut HashMap<String, String>) {
    let rounds = if def.row.v_a >= 40 { 3 } else { 1 };
    let mut apps: Vec<&Planned> = planned.iter().filter(|p| p.class == Class::App).collect();
    let mut others: Vec<&Planned> = planned.iter().filter(|p| p.class != Class::App).collect();
    let mut chain_apps = Vec::new();
    let mut chain_others = Vec::new();
    for _ in EXPAND_TEMPS {
        chain_apps.push(apps.split_off(apps.len() - rounds));
        let mut per_round = Vec::new();
        for _ in 0..rounds {
            per_round.push(others.split_off(others.len() - 8));
        }
        chain_others.push(per_round);
    }
    let reserved: std::collections::HashSet<&str> = chain_apps
        .iter()
        .flatten()
        .chain(chain_others.iter().flatten().flatten())
        .map(|p| p.hash.as_str())
        .collect();
    let rest: Vec<&Planned> = planned.iter().filter(|p| !reserved.contains(p.hash.as_str())).collect();
    let half = rest.len().div_ceil(2);
    let parts = [rest[..half].to_vec(), rest[half..].to_vec()];

    for (ti, &t) in EXPAND_TEMPS.iter().enumerate() {
        let mut list = parts[ti].clone();
        let first_app = list.iter().position(|p| p.class == Class::App).expect("an applicable variant per temperature");
        let a = list.remove(first_app);
        list.insert(0, a);
        let n = list.len();
        let cuts = [0, n / 3, 2 * n / 3, n];
        let chunk = |k: usize| -> Vec<String> { list[cuts[k]..cuts[k + 1]].iter().map(|p| p.code.clone()).collect() };
        let c1 = chunk(0);
        let mut c2 = chunk(1);
        let mut c3 = chunk(2);
        // repeats of earlier answers, one reformatted
        c2.insert(1.min(c2.len()), c1[0].clone());
        if c1.len() > 1 {
            c2.push(c1[1].clone());
        }
        if let Some(w) = c2.iter().map(|c| c.replacen(" = ", "=", 1)).find(|w| !c2.contains(w)) {
            c3.insert(c3.len() / 2, w);
        }
        for (i, codes) in [c1, c2, c3].into_iter().enumerate() {
            let spec = PromptSpec::new(PromptKind::VariantGen, cpat, &cpat.lhs, t, i as u32 + 1);
            insert(cache, &spec, cpat, blocks("VARIANT", &codes));
        }

        let seed = list[0];
        let mut prev = seed.code.clone();
        for r in 0..rounds {
            let mut codes = vec![chain_apps[ti][r].code.clone()];
            codes.extend(chain_others[ti][r].iter().map(|p| p.code.clone()));
            if r == 0 {
                codes.push(seed.code.clone());
            }
            answers.insert(seed_prompt(cpat, t, r as u32 + 1, &prev), blocks("VARIANT", &codes));
            prev = chain_apps[ti][r].code.clone();
        }
        if ti == 0 {
            if let Some(second) = list.iter().filter(|p| p.class == Class::App).nth(1) {
                let text = format!("Another way to write it:\n\n```VARIANT\n{}\n", chain_others[0][0][0].code);
                answers.insert(seed_prompt(cpat, t, 1, &second.code), text);
            }
        }
    }

    for p in planned {
        let ty = PromptSpec::new(PromptKind::TypeInfer, cpat, &p.code, 0.0, 1).render(cpat);
        answers.insert(ty, type_answer(def, p));
        let im = PromptSpec::new(PromptKind::ImportInfer, cpat, &p.code, 0.0, 1).render(cpat);
        answers.insert(im, import_answer(p));
    }
}

/// Kind k first shows up at iteration k + shift(t); kind 7 never does.
pub fn shift(t: f64) -> u32 {
    ((1.2 - t) * 5.0).round() as u32
}

pub fn test_records(def: &Def, cpat: &Cpat, tests: &Tests, cache: &mut ReplayCache) {
    let w = wrapper_name(cpat);
    let p = def.primary();
    let original = wrap_fragment(&cpat.lhs, cpat, &Default::default()).unwrap();
    let lit = def.literal_args(4);
    let uninit = format!("assert {w}({lit}) == {}", expected(&original, &[], &format!("{w}({lit})")));
    let mut by_kind: BTreeMap<u32, usize> = BTreeMap::new();
    for t in TUNE_TEMPS {
        for i in 1..=10u32 {
            let mut codes = Vec::new();
            let k = i as i64 - shift(t) as i64;
            if (1..=6).contains(&k) {
                codes.push(tests.kinds[k as usize - 1].clone());
                if k >= 2 {
                    codes.push(tests.kinds[k as usize - 2].clone());
                }
                *by_kind.entry(k as u32).or_default() += 1;
            }
            if i % 3 == 0 {
                codes.push(format!("{p} = [{i}, 2\nassert {w}({p}) == {i}"));
            }
            if i % 4 == 1 {
                let (setup, args) = def.test_inputs(4 + i as usize % 3);
                let call = format!("{w}({args})");
                let exp = expected(&original, &setup, &call);
                codes.push(format!("{}\nassert {} != {}", setup.join("\n"), call, exp));
            }
            if i == 2 {
                codes.push(uninit.clone());
            }
            let text = if codes.is_empty() {
                "Every behaviour worth checking is already covered.".to_string()
            } else {
                blocks("TEST", &codes)
            };
            let spec = PromptSpec::new(PromptKind::TestGen, cpat, &cpat.lhs, t, i);
            insert(cache, &spec, cpat, text);
        }
    }
}
