//! Per-CPAT variant plans: which code each variant has, which ladder class
//! it must land in, and the completions that deliver it.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use morphweave::applicability::is_applicable;
use morphweave::cpat::Cpat;
use morphweave::harness::{referenced_modules, wrap_with, wrapper_name, InProcessSandbox, Harness, VerdictStatus};
use morphweave::interp::{Interp, Limits};
use morphweave::pipeline::norm_hash;
use morphweave::synthesis::correspond;
use morphweave::syntax::{self, ast::StmtKind};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::defs::{instantiate, roles, Def, OutKind, KIND_LEN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Class {
    App,
    Napp,
    /// Correct, but the labels call it not useful.
    Nu,
    /// Misbehaves only when the primary input has `KIND_LEN[k - 1]` items.
    Fault(usize),
    Syntax,
    Type,
    Import,
}

impl Class {
    pub fn truly_correct(self) -> bool {
        matches!(self, Class::App | Class::Napp | Class::Nu)
    }

    /// Correct as far as the kind 1..5 suite can tell.
    pub fn passes_suite(self) -> bool {
        self.truly_correct() || matches!(self, Class::Fault(6) | Class::Fault(7))
    }

    pub fn labeled_not_useful(self) -> bool {
        matches!(self, Class::Nu | Class::Fault(6) | Class::Fault(7))
    }
}

#[derive(Clone, Debug)]
pub struct Planned {
    pub code: String,
    pub class: Class,
    pub hash: String,
    /// Role to variable name, including a kept CPAT output name under `O`.
    pub names: BTreeMap<char, String>,
    pub import_module: Option<&'static str>,
}

pub struct ShapeInfo {
    pub app: Vec<&'static str>,
    pub napp: Vec<&'static str>,
}

pub const LIMITS: Limits = Limits {
    steps: 2_000_000,
    cells: 1_000_000,
};

/// Runs `call` after `setup` against the wrapped original and prints the result.
pub fn expected(original: &str, setup: &[String], call: &str) -> String {
    let mut it = Interp::new(LIMITS);
    it.run_source(original).expect("original runs");
    it.run_source(&setup.join("\n")).expect("setup runs");
    let e = syntax::parse_fragment(call).expect("call parses");
    let StmtKind::Expr(e) = &e.body[0].kind else { panic!("not an expression") };
    let g = it.globals.clone();
    it.eval(e, &g).expect("call evaluates").repr()
}

pub struct Tests {
    /// Valid test per fault kind 1..=7.
    pub kinds: Vec<String>,
}

pub fn kind_tests(def: &Def, cpat: &Cpat) -> Tests {
    let original = morphweave::harness::wrap_fragment(&cpat.lhs, cpat, &BTreeSet::new()).unwrap();
    let w = wrapper_name(cpat);
    let kinds = KIND_LEN
        .iter()
        .map(|&len| {
            let (setup, args) = def.test_inputs(len);
            let call = format!("{}({})", w, args);
            let exp = expected(&original, &setup, &call);
            format!("{}\nassert {} == {}", setup.join("\n"), call, exp)
        })
        .collect();
    Tests { kinds }
}

fn default_names(def: &Def, shape: &str, offset: usize) -> BTreeMap<char, String> {
    let mut m = BTreeMap::new();
    for r in roles(shape) {
        let p = def.pool(r);
        m.insert(r, p[offset % p.len()].to_string());
    }
    m
}

/// Runs the wrapped code against every kind test; returns the failing kinds.
pub fn failing_kinds(cpat: &Cpat, code: &str, tests: &Tests) -> Result<Vec<usize>, String> {
    let ast = syntax::parse_fragment(code).map_err(|e| e.to_string())?;
    let corr = correspond(&ast, cpat).map_err(|e| e.to_string())?;
    let src = wrap_with(&ast, cpat, &corr, &referenced_modules(&ast)).map_err(|e| e.to_string())?;
    let sb = InProcessSandbox;
    let h = Harness::new(&sb);
    let mut bad = Vec::new();
    for (k, t) in tests.kinds.iter().enumerate() {
        if h.run_one("probe", &src, t).unwrap().status != VerdictStatus::Pass {
            bad.push(k + 1);
        }
    }
    Ok(bad)
}

/// Checks every shape binds its roles to the right CPAT variables and
/// behaves like the original, then splits them by the applicability filter.
pub fn analyze_shapes(def: &Def, cpat: &Cpat, tests: &Tests) -> ShapeInfo {
    let mut info = ShapeInfo {
        app: Vec::new(),
        napp: Vec::new(),
    };
    for &shape in def.shapes {
        let names = default_names(def, shape, 0);
        let code = instantiate(shape, &names);
        let ast = syntax::parse_fragment(&code).unwrap_or_else(|e| panic!("{}: shape does not parse: {}\n{}", def.id(), e, code));
        let corr = correspond(&ast, cpat).unwrap_or_else(|e| panic!("{}: {}\n{}", def.id(), e, code));
        for (k, role) in [(0, 'I'), (1, 'J')] {
            if let (Some((input, _)), Some(name)) = (def.inputs.get(k), names.get(&role)) {
                assert_eq!(corr.map.get(*input), Some(name), "{}: {} pairs wrongly in\n{}", def.id(), input, code);
            }
        }
        if let Some(o) = names.get(&'O') {
            assert_eq!(corr.map.get(def.output), Some(o), "{}: output pairs wrongly in\n{}", def.id(), code);
        }
        let bad = failing_kinds(cpat, &code, tests).unwrap_or_else(|e| panic!("{}: {}\n{}", def.id(), e, code));
        assert!(bad.is_empty(), "{}: shape fails kinds {:?}\n{}", def.id(), bad, code);
        if is_applicable(&ast, cpat).unwrap().passed {
            info.app.push(shape);
        } else {
            info.napp.push(shape);
        }
    }
    assert!(!info.app.is_empty() && !info.napp.is_empty(), "{}: need both kinds of shape", def.id());
    info
}

pub struct Counts {
    pub per_class: BTreeMap<Class, usize>,
}

/// Splits pooled totals over CPATs in proportion to weights, largest remainder first.
pub fn apportion(total: usize, weights: &[usize]) -> Vec<usize> {
    let sum: usize = weights.iter().sum();
    let exact: Vec<f64> = weights.iter().map(|&w| total as f64 * w as f64 / sum as f64).collect();
    let mut out: Vec<usize> = exact.iter().map(|x| x.floor() as usize).collect();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = exact[a] - exact[a].floor();
        let rb = exact[b] - exact[b].floor();
        rb.partial_cmp(&ra).unwrap().then(a.cmp(&b))
    });
    let mut left = total - out.iter().sum::<usize>();
    for k in order {
        if left == 0 {
            break;
        }
        out[k] += 1;
        left -= 1;
    }
    out
}

/// Pooled counts of fault kinds 2..=5, the ones the tuning grid separates.
pub const POOLED_FAULTS: [usize; 4] = [467, 388, 343, 309];

pub fn class_counts(defs: &[Def]) -> Vec<Counts> {
    let inc: Vec<usize> = defs.iter().map(|d| d.row.v - d.row.v_c).collect();
    let faults: Vec<Vec<usize>> = POOLED_FAULTS.iter().map(|&t| apportion(t, &inc)).collect();
    defs.iter()
        .enumerate()
        .map(|(k, d)| {
            let r = d.row;
            let mut m = BTreeMap::new();
            m.insert(Class::App, r.v_a);
            m.insert(Class::Napp, r.v_u - r.v_a);
            m.insert(Class::Nu, r.v_c - r.v_u - d.fp);
            m.insert(Class::Fault(6), d.fp / 2);
            m.insert(Class::Fault(7), d.fp - d.fp / 2);
            let syn = (inc[k] as f64 * 0.07).round() as usize;
            let typ = (inc[k] as f64 * 0.06).round() as usize;
            let imp = (inc[k] as f64 * 0.04).round() as usize;
            m.insert(Class::Syntax, syn);
            m.insert(Class::Type, typ);
            m.insert(Class::Import, imp);
            let mut rest = inc[k] - syn - typ - imp;
            for (j, f) in faults.iter().enumerate() {
                m.insert(Class::Fault(j + 2), f[k]);
                rest -= f[k];
            }
            m.insert(Class::Fault(1), rest);
            Counts { per_class: m }
        })
        .collect()
}

const FOREIGN: [&str; 6] = ["torch", "tensorflow", "jax", "pandas", "scipy", "cupy"];

fn corruption(def: &Def, sink: &str, len: usize, primary: &str) -> String {
    let body = match def.out_kind {
        OutKind::Int => format!("{s} = {s} + 1", s = sink),
        OutKind::List => format!("{s} = {s} + [0]", s = sink),
        OutKind::Dict => format!("{}[\"zz\"] = 0", sink),
        OutKind::Str => format!("{s} = {s} + \"!\"", s = sink),
    };
    format!("\nif len({}) == {}:\n    {}", primary, len, body)
}

fn drop_for_colon(code: &str) -> String {
    let mut out = Vec::new();
    let mut done = false;
    for line in code.lines() {
        if !done && line.trim_start().starts_with("for ") && line.ends_with(':') {
            out.push(line[..line.len() - 1].to_string());
            done = true;
        } else {
            out.push(line.to_string());
        }
    }
    assert!(done, "no for header in\n{}", code);
    out.join("\n")
}

pub struct Planner<'a> {
    pub def: &'a Def,
    pub shapes: &'a ShapeInfo,
    pub seen: HashSet<String>,
    pub rng: ChaCha8Rng,
}

impl<'a> Planner<'a> {
    fn pick_names(&mut self, shape: &str, fixed_out: bool) -> BTreeMap<char, String> {
        let mut m = BTreeMap::new();
        for r in roles(shape) {
            if r == 'O' && fixed_out {
                continue;
            }
            let p = self.def.pool(r);
            m.insert(r, p[self.rng.gen_range(0..p.len())].to_string());
        }
        m
    }

    fn make(&mut self, class: Class) -> Planned {
        let d = self.def;
        for _ in 0..10_000 {
            let pool: Vec<&'static str> = match class {
                Class::Napp => self.shapes.napp.clone(),
                Class::Nu => self.shapes.app.iter().chain(&self.shapes.napp).copied().collect(),
                _ => self.shapes.app.clone(),
            };
            let shape = *pool.choose(&mut self.rng).unwrap();
            let fixed_out = class == Class::Import;
            let mut names = self.pick_names(shape, fixed_out);
            let mut code = instantiate(shape, &names);
            if fixed_out {
                code = code.replace("$O", d.output);
            }
            if !names.contains_key(&'O') && d.sink == 'O' {
                names.insert('O', d.output.to_string());
            }
            let sink = names[&d.sink].clone();
            let primary = names[&'I'].clone();
            let mut import_module = None;
            code = match class {
                Class::Fault(k) => format!("{}{}", code, corruption(d, &sink, KIND_LEN[k - 1], &primary)),
                Class::Syntax => drop_for_colon(&code),
                Class::Type => match d.out_kind {
                    OutKind::Str => format!("{}\n{s} = [{s}]", code, s = sink),
                    _ => format!("{}\n{s} = str({s})", code, s = sink),
                },
                Class::Import => {
                    let m = FOREIGN[self.rng.gen_range(0..FOREIGN.len())];
                    import_module = Some(m);
                    format!("import {}\n{}", m, code)
                }
                _ => code,
            };
            let hash = norm_hash(&code);
            if self.seen.insert(hash.clone()) {
                return Planned {
                    code,
                    class,
                    hash,
                    names,
                    import_module,
                };
            }
        }
        panic!("{}: ran out of distinct {:?} variants", d.id(), class);
    }

    pub fn plan(&mut self, counts: &Counts) -> Vec<Planned> {
        let mut out = Vec::new();
        for (&class, &n) in &counts.per_class {
            for _ in 0..n {
                out.push(self.make(class));
            }
        }
        out.shuffle(&mut self.rng);
        out
    }
}

/// Chain-of-thought answer ending in the type map.
pub fn type_answer(def: &Def, p: &Planned) -> String {
    let mut m = serde_json::Map::new();
    for (&role, name) in &p.names {
        let ty = if role == 'I' && p.class == Class::Type {
            "str"
        } else {
            def.role_type(role)
        };
        m.insert(name.clone(), serde_json::Value::String(ty.to_string()));
    }
    format!(
        "Tracing each name back to where it is bound gives these types.\n{}",
        serde_json::Value::Object(m)
    )
}

pub fn import_answer(p: &Planned) -> String {
    let mut mods: BTreeSet<String> = match syntax::parse_fragment(&p.code) {
        Ok(ast) => referenced_modules(&ast),
        Err(_) => BTreeSet::new(),
    };
    if let Some(m) = p.import_module {
        mods.insert(m.to_string());
    }
    let list: Vec<serde_json::Value> = mods.into_iter().map(serde_json::Value::String).collect();
    format!(
        "Only attribute bases that name modules need importing.\n{}",
        serde_json::json!({ "imports": list })
    )
}

pub fn blocks(tag: &str, codes: &[String]) -> String {
    let mut s = String::from("Here are some candidates.\n\n");
    for c in codes {
        s.push_str(&format!("```{}\n{}\n```\n\n", tag, c));
    }
    s
}
