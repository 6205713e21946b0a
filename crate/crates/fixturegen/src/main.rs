//! Builds the bundled fixtures (CPATs, replay cache, labels, oracle and a
//! target corpus) and checks that the engine reproduces the reference
//! numbers from them. Deterministic: rerunning rewrites identical bytes.

mod corpus;
mod defs;
mod oracle;
mod plan;
mod replay;

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use morphweave::cpat::Cpat;
use morphweave::harness::{Harness, InProcessSandbox, TestStatus};
use morphweave::llm::{Gateway, Mode, ReplayCache};
use morphweave::pipeline::{generate_test_suite, ExpansionConfig, Expander, Labels, Variant};
use morphweave::rulegen::synthesize_rules;
use morphweave::tuner::{iteration_curves, mean_at, successive_differences, tune, CurveKind, OracleSet, TuneConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plan::{Class, Planner};

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn check(ok: bool, what: String, failures: &mut Vec<String>) {
    println!("{} {}", if ok { "ok  " } else { "FAIL" }, what);
    if !ok {
        failures.push(what);
    }
}

const CONFIG: &str = r#"# Replays the bundled completions; no network access is needed.
[paths]
cpats = "cpats"
replay_cache = "replay/cache.json"
labels = "labels.json"
oracle = "oracle"
variants = "out/variants"
tests = "out/tests"
rules = "out/rules"
reports = "out/reports"
checkpoint = "out/checkpoint.jsonl"

[expansion]
temperatures = [0.5, 0.7]
prompt_iterations = 3
feedback_iterations = 5

[test_gen]
temperature = 1.2
iterations = 5
"#;

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    for d in ["cpats", "replay", "oracle", "corpus"] {
        let _ = fs::remove_dir_all(out.join(d));
        fs::create_dir_all(out.join(d)).unwrap();
    }
    fs::write(out.join("morphweave.toml"), CONFIG).unwrap();

    let defs = defs::all();
    let counts = plan::class_counts(&defs);
    let mut cache = ReplayCache::new();
    let mut answers = HashMap::new();
    let mut cpats = Vec::new();
    let mut classes: HashMap<String, Class> = HashMap::new();
    let mut labels = Labels::default();

    for (def, counts) in defs.iter().zip(&counts) {
        let path = out.join("cpats").join(format!("{}.json", def.id()));
        fs::write(&path, pretty(&def.json())).unwrap();
        let cpat = Cpat::load(&path).unwrap();
        let tests = plan::kind_tests(def, &cpat);
        let shapes = plan::analyze_shapes(def, &cpat, &tests);
        let mut planner = Planner {
            def,
            shapes: &shapes,
            seen: Default::default(),
            rng: ChaCha8Rng::seed_from_u64(def.n as u64 * 7919 + 17),
        };
        planner.seen.insert(morphweave::pipeline::norm_hash(&cpat.lhs));
        let planned = planner.plan(counts);
        for p in &planned {
            classes.insert(p.hash.clone(), p.class);
            if p.class.passes_suite() {
                labels.useful.insert(p.hash.clone(), !p.class.labeled_not_useful());
                if p.class.labeled_not_useful() {
                    let why = if p.class == Class::Nu {
                        "equivalent but harder to read than the original"
                    } else {
                        "special-cases one input length"
                    };
                    labels.rationale.insert(p.hash.clone(), why.to_string());
                }
            }
        }
        replay::lay_out(def, &cpat, &planned, &mut cache, &mut answers);
        replay::test_records(def, &cpat, &tests, &mut cache);
        println!("{}: planned {} variants ({} app / {} napp shapes)", def.id(), planned.len(), shapes.app.len(), shapes.napp.len());
        cpats.push(cpat);
    }
    fs::write(out.join("labels.json"), labels.to_json() + "\n").unwrap();
    let cache_path = out.join("replay").join("cache.json");
    cache.save(&cache_path).unwrap();

    let mut failures = Vec::new();
    let sandbox = InProcessSandbox;
    let harness = Harness::new(&sandbox);
    let cfg = ExpansionConfig::default();

    // record pass: scripted answers fill the cache
    let gw = Gateway::with_provider(
        Box::new(replay::Scripted { answers }),
        Mode::Record { overwrite: false },
        Some(&cache_path),
    )
    .unwrap()
    .with_clock(replay::clock);
    let first = run_expansion(&gw, &harness, &cpats, &labels, &cfg);
    let mut rules_by_cpat = Vec::new();
    for (def, (cpat, (variants, rep))) in defs.iter().zip(cpats.iter().zip(&first)) {
        let r = def.row;
        check(
            (rep.v, rep.v_c, rep.v_u, rep.v_a) == (r.v, r.v_c, r.v_u, r.v_a),
            format!("{} expansion {:?} want {:?}", def.id(), (rep.v, rep.v_c, rep.v_u, rep.v_a), (r.v, r.v_c, r.v_u, r.v_a)),
            &mut failures,
        );
        for v in variants.iter() {
            if !classes.contains_key(&v.norm_hash) {
                failures.push(format!("{}: unplanned variant {}", def.id(), v.id));
            }
        }
        let (rules, _) = synthesize_rules(&gw, cpat, variants).unwrap();
        rules_by_cpat.push(rules);
    }
    gw.flush().unwrap();
    drop(gw);

    // replay-only pass must match the record pass exactly
    let gw = Gateway::open_replay(&cache_path).unwrap();
    let second = run_expansion(&gw, &harness, &cpats, &labels, &cfg);
    let a: Vec<&Vec<Variant>> = first.iter().map(|(v, _)| v).collect();
    let b: Vec<&Vec<Variant>> = second.iter().map(|(v, _)| v).collect();
    check(a == b, "replay-only rerun reproduces the record run".into(), &mut failures);

    // oracle
    let mut oracle_sets = Vec::new();
    for (def, (variants, _)) in defs.iter().zip(&first) {
        let tagged: Vec<(&Variant, Class)> = variants.iter().map(|v| (v, classes[&v.norm_hash])).collect();
        let oc = oracle::build(def.n, &def.id(), &tagged);
        fs::write(out.join("oracle").join(format!("{}.json", def.id())), pretty(&oc)).unwrap();
        oracle_sets.push(oc);
    }
    let oracle = OracleSet::load_dir(&out.join("oracle")).unwrap();
    let rep = tune(&gw, &harness, &cpats, &oracle, &TuneConfig::default()).unwrap();
    for c in rep.pooled.iter().filter(|c| c.t == 1.2) {
        println!("     t=1.2 i={} F={:.5}", c.i, c.f_measure);
    }
    check(
        (rep.selected_t, rep.selected_i) == (1.2, 5) && rep.f_measure >= 0.961,
        format!("tune selects ({}, {}) F={:.5}", rep.selected_t, rep.selected_i, rep.f_measure),
        &mut failures,
    );
    let prompt = iteration_curves(&oracle, CurveKind::Prompt).unwrap();
    let feedback = iteration_curves(&oracle, CurveKind::Feedback).unwrap();
    for (i, want) in [(1, 0.70), (2, 0.83), (3, 0.95)] {
        let m = mean_at(&prompt, 0.0, i);
        check((m - want).abs() <= 0.005, format!("prompt mean t=0 i={} {:.4} want {}", i, m, want), &mut failures);
    }
    let near = |got: &[f64], want: &[f64], tol: f64| got.len() == want.len() && got.iter().zip(want).all(|(g, w)| (g - w).abs() <= tol);
    let d = successive_differences(&prompt, 0.5, &[1, 2, 3, 4]).unwrap();
    check(near(&d, &[0.25, 0.16, 0.0, 0.0], 0.001), format!("prompt HL diffs {:?}", d), &mut failures);
    let d = successive_differences(&feedback, 0.5, &[2, 3, 4, 5]).unwrap();
    check(near(&d, &[0.01, 0.025, 0.036, 0.051], 0.001), format!("feedback HL diffs {:?}", d), &mut failures);

    // corpus
    for (def, (cpat, rules)) in defs.iter().zip(cpats.iter().zip(&rules_by_cpat)) {
        let w = corpus::write(def, cpat, rules, &out.join("corpus"));
        check(
            (w.baseline, w.full) == (def.row.t1, def.row.t2),
            format!("{} corpus {}/{} want {}/{} ({} rules, {} used)", def.id(), w.baseline, w.full, def.row.t1, def.row.t2, rules.len(), w.eligible.len()),
            &mut failures,
        );
    }

    if failures.is_empty() {
        println!("all fixture checks pass");
    } else {
        eprintln!("{} fixture checks failed", failures.len());
        std::process::exit(1);
    }
}

type Run = Vec<(Vec<Variant>, morphweave::pipeline::ExpansionReport)>;

fn run_expansion(gw: &Gateway, harness: &Harness, cpats: &[Cpat], labels: &Labels, cfg: &ExpansionConfig) -> Run {
    let mut ex = Expander::new(gw, harness);
    ex.labels = Some(labels);
    cpats
        .iter()
        .map(|cpat| {
            let tests = generate_test_suite(gw, harness, cpat, 1.2, 5).unwrap();
            let valid = tests.iter().filter(|t| t.status == TestStatus::Valid).count();
            assert_eq!(valid, 5, "{}: valid tests", cpat.id);
            ex.expand(cpat, cfg, &tests, None).unwrap()
        })
        .collect()
}

