//! Test-generation parameter selection and the iteration statistics.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::cpat::{natural_key, Cpat};
use crate::harness::{referenced_modules, wrap_fragment, Harness, HarnessError, TestCase, TestStatus, VerdictStatus};
use crate::llm::{Gateway, GatewayError};
use crate::syntax;

#[derive(Debug, thiserror::Error)]
pub enum TunerError {
    #[error("precision and recall must lie in [0, 1], got ({0}, {1})")]
    Domain(f64, f64),
    #[error("grid is incomplete: {0}")]
    GridIncomplete(String),
    #[error("cross-validation needs at least {need} CPATs, have {have}")]
    InsufficientCpats { need: usize, have: usize },
    #[error("need at least 3 non-zero differences, have {0}")]
    TooFewPairs(usize),
    #[error("paired samples differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("empty sample")]
    EmptySample,
    #[error("variant {index} of {cpat_id} lacks {field}")]
    MissingProvenance { cpat_id: String, index: usize, field: &'static str },
    #[error("oracle for {0} needs at least one correct and one incorrect variant")]
    DegenerateOracle(String),
    #[error("oracle {path}: {message}")]
    Oracle { path: String, message: String },
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Gateway(#[from] GatewayError),
}

pub fn f_measure(precision: f64, recall: f64) -> Result<f64, TunerError> {
    let ok = |x: f64| (0.0..=1.0).contains(&x);
    if !ok(precision) || !ok(recall) {
        return Err(TunerError::Domain(precision, recall));
    }
    if precision + recall == 0.0 {
        return Ok(0.0);
    }
    Ok(2.0 * precision * recall / (precision + recall))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleVariant {
    pub code: String,
    pub correct: bool,
    pub useful: bool,
    pub applicable: bool,
    pub temperature: Option<f64>,
    pub prompt_iteration: Option<u32>,
    pub feedback_iteration: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleCpat {
    pub cpat_id: String,
    pub variants: Vec<OracleVariant>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleSet {
    pub cpats: Vec<OracleCpat>,
}

impl OracleSet {
    /// Reads every `*.json` file in `dir`, one CPAT per file.
    pub fn load_dir(dir: &Path) -> Result<OracleSet, TunerError> {
        let err = |path: &Path, message: String| TunerError::Oracle {
            path: path.display().to_string(),
            message,
        };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| err(dir, e.to_string()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut cpats = Vec::new();
        for p in paths {
            let text = std::fs::read_to_string(&p).map_err(|e| err(&p, e.to_string()))?;
            let c: OracleCpat = serde_json::from_str(&text).map_err(|e| err(&p, e.to_string()))?;
            cpats.push(c);
        }
        let set = OracleSet::new(cpats);
        set.validate().map_err(|m| err(dir, m))?;
        Ok(set)
    }

    /// Sorts CPATs into natural id order so paired samples line up.
    pub fn new(mut cpats: Vec<OracleCpat>) -> OracleSet {
        cpats.sort_by_key(|c| natural_key(&c.cpat_id));
        OracleSet { cpats }
    }

    pub fn validate(&self) -> Result<(), String> {
        for c in &self.cpats {
            for (i, v) in c.variants.iter().enumerate() {
                if (v.applicable && !v.useful) || (v.useful && !v.correct) {
                    return Err(format!("{} variant {}: applicable => useful => correct violated", c.cpat_id, i));
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, cpat_id: &str) -> Option<&OracleCpat> {
        self.cpats.iter().find(|c| c.cpat_id == cpat_id)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Confusion {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub tn: usize,
}

impl Confusion {
    pub fn add(self, o: Confusion) -> Confusion {
        Confusion {
            tp: self.tp + o.tp,
            fp: self.fp + o.fp,
            fn_: self.fn_ + o.fn_,
            tn: self.tn + o.tn,
        }
    }

    pub fn precision(&self) -> f64 {
        let d = self.tp + self.fp;
        if d == 0 {
            0.0
        } else {
            self.tp as f64 / d as f64
        }
    }

    pub fn recall(&self) -> f64 {
        let d = self.tp + self.fn_;
        if d == 0 {
            0.0
        } else {
            self.tp as f64 / d as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub t: f64,
    pub i: u32,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    /// Set when the suite accepted no variant, so precision is undefined.
    #[serde(default)]
    pub empty_classification: bool,
    #[serde(default)]
    pub confusion: Confusion,
}

impl GridCell {
    pub fn from_confusion(t: f64, i: u32, c: Confusion) -> GridCell {
        let (p, r) = (c.precision(), c.recall());
        GridCell {
            t,
            i,
            precision: p,
            recall: r,
            f_measure: f_measure(p, r).expect("ratios lie in [0, 1]"),
            empty_classification: c.tp + c.fp == 0,
            confusion: c,
        }
    }
}

/// Per-variant, per-test pass table for one CPAT's oracle.
pub struct PassTable {
    tests: HashMap<String, usize>,
    /// `pass[v][k]`; `None` rows are variants that cannot be wrapped.
    pass: Vec<Option<Vec<bool>>>,
    correct: Vec<bool>,
}

impl PassTable {
    pub fn build(harness: &Harness, cpat: &Cpat, oracle: &OracleCpat, tests: &[String]) -> Result<PassTable, TunerError> {
        let index: HashMap<String, usize> = tests.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        let pass = oracle
            .variants
            .par_iter()
            .enumerate()
            .map(|(n, v)| {
                let Ok(ast) = syntax::parse_fragment(&v.code) else {
                    return Ok(None);
                };
                let Ok(src) = wrap_fragment(&v.code, cpat, &referenced_modules(&ast)) else {
                    return Ok(None);
                };
                let mut row = Vec::with_capacity(tests.len());
                for (k, t) in tests.iter().enumerate() {
                    let id = format!("{}/oracle-{}/{}", cpat.id, n, k);
                    row.push(harness.run_one(&id, &src, t)?.status == VerdictStatus::Pass);
                }
                Ok(Some(row))
            })
            .collect::<Result<Vec<_>, TunerError>>()?;
        Ok(PassTable {
            tests: index,
            pass,
            correct: oracle.variants.iter().map(|v| v.correct).collect(),
        })
    }

    /// Classifies every oracle variant with the suite. An empty suite accepts everything.
    pub fn confusion(&self, suite: &[String]) -> Confusion {
        let cols: Vec<usize> = suite.iter().filter_map(|t| self.tests.get(t).copied()).collect();
        let mut c = Confusion::default();
        for (row, &truth) in self.pass.iter().zip(&self.correct) {
            let accepted = row.as_ref().is_some_and(|r| cols.iter().all(|&k| r[k]));
            match (accepted, truth) {
                (true, true) => c.tp += 1,
                (true, false) => c.fp += 1,
                (false, true) => c.fn_ += 1,
                (false, false) => c.tn += 1,
            }
        }
        c
    }
}

fn check_oracle(oracle: &OracleCpat) -> Result<(), TunerError> {
    let correct = oracle.variants.iter().filter(|v| v.correct).count();
    if correct == 0 || correct == oracle.variants.len() {
        return Err(TunerError::DegenerateOracle(oracle.cpat_id.clone()));
    }
    Ok(())
}

/// Precision and recall of a Valid suite against one CPAT's oracle labels.
pub fn evaluate_tests(
    harness: &Harness,
    tests: &[TestCase],
    oracle: &OracleCpat,
    cpat: &Cpat,
    t: f64,
    i: u32,
) -> Result<GridCell, TunerError> {
    check_oracle(oracle)?;
    let suite: Vec<String> = tests
        .iter()
        .filter(|x| x.status == TestStatus::Valid)
        .map(|x| x.code.clone())
        .collect();
    let table = PassTable::build(harness, cpat, oracle, &suite)?;
    Ok(GridCell::from_confusion(t, i, table.confusion(&suite)))
}

fn temps_and_iters(grid: &[GridCell]) -> Result<(Vec<f64>, u32, BTreeMap<(u64, u32), &GridCell>), TunerError> {
    if grid.is_empty() {
        return Err(TunerError::GridIncomplete("empty grid".into()));
    }
    let mut temps: Vec<f64> = Vec::new();
    let mut cells = BTreeMap::new();
    for c in grid {
        if !temps.contains(&c.t) {
            temps.push(c.t);
        }
        if cells.insert((c.t.to_bits(), c.i), c).is_some() {
            return Err(TunerError::GridIncomplete(format!("duplicate cell (t={}, i={})", c.t, c.i)));
        }
    }
    temps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let max_i = grid.iter().map(|c| c.i).max().unwrap();
    for &t in &temps {
        for i in 1..=max_i {
            if !cells.contains_key(&(t.to_bits(), i)) {
                return Err(TunerError::GridIncomplete(format!("missing cell (t={}, i={})", t, i)));
            }
        }
    }
    Ok((temps, max_i, cells))
}

/// δ-convergence over iterations. At each i the best temperature is taken
/// (smaller t on ties); the first i whose best F improves on the previous
/// best by at most δ ends the search, and the previous (t, i) is returned.
pub fn select_params(grid: &[GridCell], delta: f64) -> Result<(f64, u32), TunerError> {
    let (temps, max_i, cells) = temps_and_iters(grid)?;
    let best = |i: u32| {
        let mut b: Option<(f64, f64)> = None;
        for &t in &temps {
            let f = cells[&(t.to_bits(), i)].f_measure;
            if b.map_or(true, |(_, bf)| f > bf) {
                b = Some((t, f));
            }
        }
        b.unwrap()
    };
    let mut prev = best(1);
    let mut prev_i = 1;
    for i in 2..=max_i {
        let cur = best(i);
        if cur.1 - prev.1 <= delta {
            return Ok((prev.0, prev_i));
        }
        prev = cur;
        prev_i = i;
    }
    Ok((prev.0, prev_i))
}

pub fn cell_at(grid: &[GridCell], t: f64, i: u32) -> Option<&GridCell> {
    grid.iter().find(|c| c.t == t && c.i == i)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoldEval {
    pub cpat_id: String,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fold {
    pub held: String,
    pub t: f64,
    pub i: u32,
    pub evaluations: Vec<FoldEval>,
}

/// Select on each of the first k CPATs, evaluate the choice on every other one.
/// With k = 1 the pooled grid is used and there is nothing held out.
pub fn cross_validate(
    grids: &BTreeMap<String, Vec<GridCell>>,
    pooled: &[GridCell],
    k: usize,
    delta: f64,
) -> Result<Vec<Fold>, TunerError> {
    if k <= 1 {
        log::warn!("cross-validation with k = {} has no held-out evaluation", k);
        let (t, i) = select_params(pooled, delta)?;
        return Ok(vec![Fold {
            held: "pooled".into(),
            t,
            i,
            evaluations: Vec::new(),
        }]);
    }
    if grids.len() < k {
        return Err(TunerError::InsufficientCpats {
            need: k,
            have: grids.len(),
        });
    }
    let mut ids: Vec<&String> = grids.keys().collect();
    ids.sort_by_key(|s| natural_key(s));
    let mut folds = Vec::new();
    for held in ids.iter().take(k) {
        let (t, i) = select_params(&grids[*held], delta)?;
        let mut evaluations = Vec::new();
        for other in ids.iter().filter(|o| *o != held) {
            let c = cell_at(&grids[*other], t, i)
                .ok_or_else(|| TunerError::GridIncomplete(format!("{} lacks (t={}, i={})", other, t, i)))?;
            evaluations.push(FoldEval {
                cpat_id: (*other).clone(),
                precision: c.precision,
                recall: c.recall,
                f_measure: c.f_measure,
            });
        }
        folds.push(Fold {
            held: (*held).clone(),
            t,
            i,
            evaluations,
        });
    }
    Ok(folds)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Wilcoxon {
    pub n: usize,
    pub w_plus: f64,
    pub w_minus: f64,
    /// min(W+, W-)
    pub statistic: f64,
    pub p_value: f64,
    pub exact: bool,
    pub reject: bool,
}

pub const EXACT_CUTOFF: usize = 20;
const ZERO: f64 = 1e-12;

/// Mid-ranks of |d|, doubled so ties stay integral.
fn doubled_ranks(d: &[f64]) -> Vec<u64> {
    let mut idx: Vec<usize> = (0..d.len()).collect();
    idx.sort_by(|&a, &b| d[a].abs().partial_cmp(&d[b].abs()).unwrap());
    let mut ranks = vec![0u64; d.len()];
    let mut k = 0;
    while k < idx.len() {
        let mut j = k;
        while j + 1 < idx.len() && (d[idx[j + 1]].abs() - d[idx[k]].abs()).abs() <= ZERO {
            j += 1;
        }
        // ranks k+1..=j+1 averaged, doubled
        let r2 = (k + 1 + j + 1) as u64;
        for &x in &idx[k..=j] {
            ranks[x] = r2;
        }
        k = j + 1;
    }
    ranks
}

fn nonzero_diffs(a: &[f64], b: &[f64]) -> Result<Vec<f64>, TunerError> {
    if a.len() != b.len() {
        return Err(TunerError::LengthMismatch(a.len(), b.len()));
    }
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).filter(|d| d.abs() > ZERO).collect();
    if d.len() < 3 {
        return Err(TunerError::TooFewPairs(d.len()));
    }
    Ok(d)
}

/// Two-sided signed-rank test on a - b. Exact null distribution for
/// n <= 20, normal approximation with tie correction above.
pub fn wilcoxon(a: &[f64], b: &[f64]) -> Result<Wilcoxon, TunerError> {
    let d = nonzero_diffs(a, b)?;
    let n = d.len();
    let r2 = doubled_ranks(&d);
    let wp2: u64 = d.iter().zip(&r2).filter(|(x, _)| **x > 0.0).map(|(_, r)| *r).sum();
    let total2: u64 = r2.iter().sum();
    let (w_plus, w_minus) = (wp2 as f64 / 2.0, (total2 - wp2) as f64 / 2.0);
    let (p_value, exact) = if n <= EXACT_CUTOFF {
        // counts[s] = number of sign assignments with doubled W+ = s
        let mut counts = vec![0f64; total2 as usize + 1];
        counts[0] = 1.0;
        let mut reach = 0usize;
        for &r in &r2 {
            let r = r as usize;
            for s in (0..=reach).rev() {
                if counts[s] > 0.0 {
                    counts[s + r] += counts[s];
                }
            }
            reach += r;
        }
        let all: f64 = counts.iter().sum();
        let lo: f64 = counts[..=wp2 as usize].iter().sum::<f64>() / all;
        let hi: f64 = counts[wp2 as usize..].iter().sum::<f64>() / all;
        ((2.0 * lo.min(hi)).min(1.0), true)
    } else {
        let nf = n as f64;
        let mean = nf * (nf + 1.0) / 4.0;
        let mut var = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0;
        let mut sorted = r2.clone();
        sorted.sort_unstable();
        let mut k = 0;
        while k < sorted.len() {
            let j = sorted[k..].iter().take_while(|&&r| r == sorted[k]).count();
            let t = j as f64;
            var -= (t * t * t - t) / 48.0;
            k += j;
        }
        let z = ((w_plus - mean).abs() - 0.5).max(0.0) / var.sqrt();
        let norm = Normal::new(0.0, 1.0).expect("standard normal");
        ((2.0 * (1.0 - norm.cdf(z))).min(1.0), false)
    };
    Ok(Wilcoxon {
        n,
        w_plus,
        w_minus,
        statistic: w_plus.min(w_minus),
        p_value,
        exact,
        reject: p_value < 0.05,
    })
}

/// Median of the Walsh averages (x_j + x_k) / 2, j <= k.
pub fn hodges_lehmann(x: &[f64]) -> Result<f64, TunerError> {
    if x.is_empty() {
        return Err(TunerError::EmptySample);
    }
    let mut w = Vec::with_capacity(x.len() * (x.len() + 1) / 2);
    for j in 0..x.len() {
        for k in j..x.len() {
            w.push((x[j] + x[k]) / 2.0);
        }
    }
    w.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let m = w.len();
    Ok(if m % 2 == 1 {
        w[m / 2]
    } else {
        (w[m / 2 - 1] + w[m / 2]) / 2.0
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    Prompt,
    Feedback,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub t: f64,
    pub cpat_id: String,
    /// Cumulative ratio after iteration 1, 2, ...
    pub series: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairedDistribution {
    pub label: String,
    pub samples: Vec<f64>,
}

/// Prompt curves count a temperature's prompt-iteration variants (feedback
/// iteration 0) by prompt iteration. Feedback curves count not-useful variants
/// produced by feedback iterations (>= 1) by feedback iteration. Series at
/// one temperature share a length; CPATs finishing early are padded with 1.
pub fn iteration_curves(oracle: &OracleSet, kind: CurveKind) -> Result<Vec<Curve>, TunerError> {
    let mut per: BTreeMap<u64, Vec<(String, Vec<u32>)>> = BTreeMap::new();
    for c in &oracle.cpats {
        let mut by_t: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (index, v) in c.variants.iter().enumerate() {
            let missing = |field| TunerError::MissingProvenance {
                cpat_id: c.cpat_id.clone(),
                index,
                field,
            };
            let t = v.temperature.ok_or_else(|| missing("temperature"))?;
            let fi = v.feedback_iteration.ok_or_else(|| missing("feedback_iteration"))?;
            let it = match kind {
                CurveKind::Prompt => {
                    let pi = v.prompt_iteration.ok_or_else(|| missing("prompt_iteration"))?;
                    if fi != 0 {
                        continue;
                    }
                    pi
                }
                CurveKind::Feedback => {
                    if fi == 0 || v.useful {
                        continue;
                    }
                    fi
                }
            };
            by_t.entry(t.to_bits()).or_default().push(it);
        }
        for (t, its) in by_t {
            per.entry(t).or_default().push((c.cpat_id.clone(), its));
        }
    }
    let mut out = Vec::new();
    for (t, rows) in per {
        let len = rows.iter().flat_map(|(_, its)| its.iter().copied()).max().unwrap_or(0);
        for (cpat_id, its) in rows {
            let total = its.len() as f64;
            let series = (1..=len)
                .map(|i| its.iter().filter(|&&x| x <= i).count() as f64 / total)
                .collect();
            out.push(Curve {
                t: f64::from_bits(t),
                cpat_id,
                series,
            });
        }
    }
    out.sort_by(|a, b| {
        a.t.partial_cmp(&b.t)
            .unwrap()
            .then_with(|| natural_key(&a.cpat_id).cmp(&natural_key(&b.cpat_id)))
    });
    Ok(out)
}

/// Samples across CPATs at temperature t after iteration i (1-based), in CPAT order.
pub fn distribution(curves: &[Curve], t: f64, i: u32) -> PairedDistribution {
    let samples = curves
        .iter()
        .filter(|c| c.t == t)
        .map(|c| c.series.get(i as usize - 1).copied().unwrap_or(1.0))
        .collect();
    PairedDistribution {
        label: format!("t={} i={}", t, i),
        samples,
    }
}

pub fn mean_at(curves: &[Curve], t: f64, i: u32) -> f64 {
    let d = distribution(curves, t, i).samples;
    if d.is_empty() {
        0.0
    } else {
        d.iter().sum::<f64>() / d.len() as f64
    }
}

/// Hodges-Lehmann estimate of D_{i+1} - D_i for each i in `iters`.
pub fn successive_differences(curves: &[Curve], t: f64, iters: &[u32]) -> Result<Vec<f64>, TunerError> {
    iters
        .iter()
        .map(|&i| {
            let a = distribution(curves, t, i + 1).samples;
            let b = distribution(curves, t, i).samples;
            let d: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            hodges_lehmann(&d)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TuneConfig {
    pub temperatures: Vec<f64>,
    pub max_iteration: u32,
    pub delta: f64,
    pub folds: usize,
}

impl Default for TuneConfig {
    fn default() -> Self {
        TuneConfig {
            temperatures: vec![0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2],
            max_iteration: 10,
            delta: 0.05,
            folds: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuneReport {
    pub selected_t: f64,
    pub selected_i: u32,
    pub f_measure: f64,
    pub precision: f64,
    pub recall: f64,
    pub pooled: Vec<GridCell>,
    pub per_cpat: BTreeMap<String, Vec<GridCell>>,
    pub folds: Vec<Fold>,
}

impl TuneReport {
    pub fn grid_csv(&self) -> String {
        let mut s = String::from("scope,t,i,precision,recall,f_measure,accepted\n");
        let mut row = |scope: &str, c: &GridCell| {
            s.push_str(&format!(
                "{},{},{},{:.6},{:.6},{:.6},{}\n",
                scope,
                c.t,
                c.i,
                c.precision,
                c.recall,
                c.f_measure,
                c.confusion.tp + c.confusion.fp
            ));
        };
        for c in &self.pooled {
            row("pooled", c);
        }
        let mut ids: Vec<&String> = self.per_cpat.keys().collect();
        ids.sort_by_key(|s| natural_key(s));
        for id in ids {
            for c in &self.per_cpat[id] {
                row(id, c);
            }
        }
        s
    }
}

/// Builds the (t, i) grid for every CPAT from generated test suites, pools it,
/// selects parameters and cross-validates.
pub fn tune(
    gateway: &Gateway,
    harness: &Harness,
    cpats: &[Cpat],
    oracle: &OracleSet,
    cfg: &TuneConfig,
) -> Result<TuneReport, TunerError> {
    let mut per_cpat = BTreeMap::new();
    let mut pooled: BTreeMap<(u64, u32), Confusion> = BTreeMap::new();
    for oc in &oracle.cpats {
        let Some(cpat) = cpats.iter().find(|c| c.id == oc.cpat_id) else {
            log::warn!("oracle CPAT {} has no definition, skipped", oc.cpat_id);
            continue;
        };
        check_oracle(oc)?;
        // suites[t][i-1] = cumulative valid tests after iteration i
        let mut suites: Vec<Vec<Vec<String>>> = Vec::new();
        let mut distinct: BTreeSet<String> = BTreeSet::new();
        for &t in &cfg.temperatures {
            let mut raw = Vec::new();
            for i in 1..=cfg.max_iteration {
                for (k, f) in crate::llm::or_empty(gateway.generate_tests(cpat, t, i))?.into_iter().enumerate() {
                    raw.push(TestCase {
                        id: format!("{}/t{}/i{}-{}", cpat.id, t, i, k),
                        code: f.text,
                        cpat_id: cpat.id.clone(),
                        status: TestStatus::RawT,
                        temperature: t,
                        iteration: i,
                    });
                }
            }
            let valid = harness.validate_tests(raw, cpat)?;
            let mut cum = Vec::new();
            let mut acc: Vec<String> = Vec::new();
            for i in 1..=cfg.max_iteration {
                for tc in valid.iter().filter(|x| x.iteration == i && x.status == TestStatus::Valid) {
                    if !acc.contains(&tc.code) {
                        acc.push(tc.code.clone());
                    }
                }
                cum.push(acc.clone());
            }
            distinct.extend(acc);
            suites.push(cum);
        }
        let tests: Vec<String> = distinct.into_iter().collect();
        let table = PassTable::build(harness, cpat, oc, &tests)?;
        let mut grid = Vec::new();
        for (ti, &t) in cfg.temperatures.iter().enumerate() {
            for i in 1..=cfg.max_iteration {
                let c = table.confusion(&suites[ti][i as usize - 1]);
                let e = pooled.entry((t.to_bits(), i)).or_default();
                *e = e.add(c);
                grid.push(GridCell::from_confusion(t, i, c));
            }
        }
        per_cpat.insert(oc.cpat_id.clone(), grid);
    }
    let pooled: Vec<GridCell> = pooled
        .into_iter()
        .map(|((t, i), c)| GridCell::from_confusion(f64::from_bits(t), i, c))
        .collect();
    let (t, i) = select_params(&pooled, cfg.delta)?;
    let folds = cross_validate(&per_cpat, &pooled, cfg.folds, cfg.delta)?;
    let chosen = cell_at(&pooled, t, i).expect("selected cell exists").clone();
    Ok(TuneReport {
        selected_t: t,
        selected_i: i,
        f_measure: chosen.f_measure,
        precision: chosen.precision,
        recall: chosen.recall,
        pooled,
        per_cpat,
        folds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(t: f64, i: u32, f: f64) -> GridCell {
        GridCell {
            t,
            i,
            precision: f,
            recall: f,
            f_measure: f,
            empty_classification: false,
            confusion: Confusion::default(),
        }
    }

    #[test]
    fn f_examples() {
        assert!((f_measure(0.966, 0.966).unwrap() - 0.966).abs() < 1e-12);
        assert_eq!(f_measure(1.0, 0.0).unwrap(), 0.0);
        assert!((f_measure(0.9, 0.8).unwrap() - 0.847_058_823_529).abs() < 1e-9);
        assert!(f_measure(1.1, 0.5).is_err());
    }

    #[test]
    fn selection() {
        let flat: Vec<GridCell> = [0.0, 0.6, 1.2]
            .iter()
            .flat_map(|&t| (1..=4).map(move |i| cell(t, i, 0.5)))
            .collect();
        assert_eq!(select_params(&flat, 0.05).unwrap(), (0.0, 1));
        let rising: Vec<GridCell> = [0.0, 1.2]
            .iter()
            .flat_map(|&t| (1..=4).map(move |i| cell(t, i, 0.1 * i as f64 + t / 10.0)))
            .collect();
        assert_eq!(select_params(&rising, 0.05).unwrap(), (1.2, 4));
        let mut holed = flat.clone();
        holed.remove(5);
        assert!(matches!(select_params(&holed, 0.05), Err(TunerError::GridIncomplete(_))));
    }

    #[test]
    fn wilcoxon_examples() {
        let w = wilcoxon(&[1.0, 2.0, 3.0], &[0.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.w_plus, 6.0);
        assert!((w.p_value - 0.25).abs() < 1e-12);
        assert!(matches!(wilcoxon(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]), Err(TunerError::TooFewPairs(0))));
    }

    #[test]
    fn hl_examples() {
        assert_eq!(hodges_lehmann(&[1.0, 2.0, 3.0]).unwrap(), 2.0);
        assert_eq!(hodges_lehmann(&[4.5]).unwrap(), 4.5);
        assert_eq!(hodges_lehmann(&[-1.0, 1.0]).unwrap(), 0.0);
        assert!(matches!(hodges_lehmann(&[]), Err(TunerError::EmptySample)));
    }

    #[test]
    fn curve_provenance() {
        let v = |t, p, fi| OracleVariant {
            code: "x = 1".into(),
            correct: false,
            useful: false,
            applicable: false,
            temperature: Some(t),
            prompt_iteration: Some(p),
            feedback_iteration: fi,
        };
        let o = OracleSet::new(vec![OracleCpat {
            cpat_id: "cpat-1".into(),
            variants: vec![v(0.5, 1, Some(0)), v(0.5, 1, Some(0)), v(0.5, 3, Some(0)), v(0.5, 1, Some(2))],
        }]);
        let c = iteration_curves(&o, CurveKind::Prompt).unwrap();
        assert_eq!(c[0].series, vec![2.0 / 3.0, 2.0 / 3.0, 1.0]);
        let f = iteration_curves(&o, CurveKind::Feedback).unwrap();
        assert_eq!(f[0].series, vec![0.0, 1.0]);
        let mut bad = o.clone();
        bad.cpats[0].variants[0].feedback_iteration = None;
        assert!(matches!(iteration_curves(&bad, CurveKind::Prompt), Err(TunerError::MissingProvenance { .. })));
    }
}
