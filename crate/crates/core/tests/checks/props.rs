//! Ladder, subset-chain, matcher and rewrite properties.



use std::collections::{BTreeMap, BTreeSet};

use morphweave::pipeline::{audit_ladder, norm_hash, summarize, Event, Variant, VariantStatus};
use morphweave::syntax::{parse_fragment, parse_template, print_canonical, print_expr, print_stmts, Ast, ExprKind, Stmt, StmtKind};
use morphweave::template::{find_matches, find_matches_in, parse_rule, rewrite_all, MatchBinding};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn variant(id: usize, status: VariantStatus) -> Variant {
    Variant {
        id: format!("c/{}", id),
        code: format!("x = {}", id),
        cpat_id: "c".into(),
        temperature: 0.5,
        prompt_iteration: 1,
        feedback_iteration: 0,
        feedback_parent: None,
        status,
        norm_hash: norm_hash(&format!("x = {}", id)),
    }
}

/// Random walks up the ladder: accepted steps climb by one level, and the
/// audit rejects any replayed step backwards.
pub fn ladder_only_climbs(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..cases {
        let mut v = variant(0, VariantStatus::Raw);
        let mut events = vec![Event::Created { unit: "u".into(), variant: v.clone() }];
        for _ in 0..rng.gen_range(0..12) {
            let next = VariantStatus::ALL[rng.gen_range(0..VariantStatus::ALL.len())];
            let from = v.status;
            match v.advance(next) {
                Ok(()) => {
                    assert_eq!(next.level(), from.level() + 1);
                    assert!(!from.is_terminal());
                    events.push(Event::Transition { id: v.id.clone(), from, to: next });
                }
                Err(_) => assert_eq!(v.status, from),
            }
        }
        assert!(audit_ladder(&events).is_ok());
        if v.status.level() > 0 {
            events.push(Event::Transition { id: v.id.clone(), from: v.status, to: VariantStatus::Raw });
            assert!(audit_ladder(&events).is_err());
        }
    }
}

pub fn subset_chain(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..cases {
        let vs: Vec<Variant> = (0..rng.gen_range(0..60))
            .map(|k| variant(k, VariantStatus::ALL[rng.gen_range(0..VariantStatus::ALL.len())]))
            .collect();
        let r = summarize("c", 1, &vs);
        assert!(r.v >= r.v_c && r.v_c >= r.v_u && r.v_u >= r.v_a, "{:?}", r);
        assert_eq!(r.by_status.values().sum::<usize>(), r.v);
    }
}

/// Random programs and patterns over a tiny grammar.
struct Gen {
    rng: ChaCha8Rng,
    /// Holes that appear where a name is stored; instances bind them to names.
    store_holes: BTreeSet<String>,
}

const NAMES: [&str; 4] = ["a", "b", "c", "xs"];

impl Gen {
    fn name(&mut self) -> String {
        NAMES.choose(&mut self.rng).unwrap().to_string()
    }

    fn expr(&mut self, depth: u32, holes: &[&str]) -> String {
        let r = self.rng.gen_range(0..10);
        if depth == 0 || r < 4 {
            if !holes.is_empty() && self.rng.gen_bool(0.35) {
                return holes.choose(&mut self.rng).unwrap().to_string();
            }
            return if self.rng.gen_bool(0.6) {
                self.name()
            } else {
                self.rng.gen_range(0..3).to_string()
            };
        }
        let sub = |g: &mut Gen| g.expr(depth - 1, holes);
        match r {
            4 => format!("({} + {})", sub(self), sub(self)),
            5 => format!("({} * {})", sub(self), sub(self)),
            6 => format!("g({})", sub(self)),
            7 => format!("xs[{}]", sub(self)),
            8 => format!("len({})", sub(self)),
            _ => format!("({} - {})", sub(self), sub(self)),
        }
    }

    fn target(&mut self, holes: &[&str]) -> String {
        if !holes.is_empty() && self.rng.gen_bool(0.4) {
            let h = holes.choose(&mut self.rng).unwrap().to_string();
            self.store_holes.insert(h.clone());
            h
        } else {
            self.name()
        }
    }

    fn stmt(&mut self, depth: u32, holes: &[&str], stmt_hole: bool, out: &mut Vec<String>, indent: &str) {
        let r = self.rng.gen_range(0..if depth == 0 { 6 } else { 9 });
        match r {
            0..=2 => {
                let t = self.target(holes);
                let e = self.expr(2, holes);
                out.push(format!("{}{} = {}", indent, t, e));
            }
            3 => {
                let t = self.target(holes);
                let e = self.expr(2, holes);
                out.push(format!("{}{} += {}", indent, t, e));
            }
            4 => {
                let e = self.expr(2, holes);
                out.push(format!("{}g({})", indent, e));
            }
            5 if stmt_hole => out.push(format!("{}:[[s0]]", indent)),
            5 => out.push(format!("{}pass", indent)),
            6 | 7 => {
                let head = if r == 6 {
                    let t = self.target(holes);
                    format!("for {} in {}:", t, self.expr(1, holes))
                } else {
                    format!("if {}:", self.expr(1, holes))
                };
                out.push(format!("{}{}", indent, head));
                let inner = format!("{}    ", indent);
                for _ in 0..self.rng.gen_range(1..=2) {
                    self.stmt(depth - 1, holes, stmt_hole, out, &inner);
                }
            }
            _ => {
                let e = self.expr(1, holes);
                out.push(format!("{}while {}:", indent, e));
                self.stmt(depth - 1, holes, stmt_hole, out, &format!("{}    ", indent));
            }
        }
    }

    fn pattern(&mut self) -> String {
        self.store_holes.clear();
        let holes = ["$0", "$1"];
        let mut lines = Vec::new();
        for _ in 0..self.rng.gen_range(1..=2) {
            self.stmt(1, &holes, true, &mut lines, "");
        }
        lines.join("\n").replace("$0", ":[[v0]]").replace("$1", ":[[v1]]")
    }

    /// Fills a pattern's holes: names where stored, small expressions elsewhere.
    fn instance(&mut self, pattern: &str) -> String {
        let mut text = pattern.to_string();
        for v in ["v0", "v1"] {
            let hole = format!(":[[{}]]", v);
            let stored = self.store_holes.contains(&format!("${}", &v[1..]));
            let fill = if stored || self.rng.gen_bool(0.4) { self.name() } else { self.expr(2, &[]) };
            // occasionally break consistency between repeated holes
            if self.rng.gen_bool(0.15) && !stored {
                let other = self.expr(1, &[]);
                text = text.replacen(&hole, &other, 1);
            }
            text = text.replace(&hole, &fill);
        }
        let mut one = Vec::new();
        self.stmt(0, &[], false, &mut one, "");
        text.replace(":[[s0]]", one[0].trim())
    }

    fn program(&mut self, pattern: &str) -> String {
        let mut lines = Vec::new();
        for _ in 0..self.rng.gen_range(2..=6) {
            let r = self.rng.gen_range(0..4);
            if r == 0 {
                lines.extend(self.instance(pattern).lines().map(str::to_string));
            } else if r == 1 {
                lines.push("for q in xs:".to_string());
                lines.extend(self.instance(pattern).lines().map(|l| format!("    {}", l)));
            } else {
                self.stmt(2, &[], false, &mut lines, "");
            }
        }
        lines.join("\n")
    }
}

fn needs_parens(k: &ExprKind) -> bool {
    matches!(
        k,
        ExprKind::BinOp { .. } | ExprKind::UnaryOp { .. } | ExprKind::BoolOp { .. } | ExprKind::Compare { .. } | ExprKind::IfExp { .. } | ExprKind::Lambda { .. }
    )
}

/// Substitutes text for holes, indenting multi-line statement fills.
fn substitute(pattern: &str, fills: &BTreeMap<String, String>) -> String {
    let mut out = Vec::new();
    for line in pattern.lines() {
        let indent = &line[..line.len() - line.trim_start().len()];
        if line.trim() == ":[[s0]]" {
            for (k, l) in fills[":[[s0]]"].lines().enumerate() {
                out.push(if k == 0 { format!("{}{}", indent, l) } else { format!("{}{}", indent, l) });
            }
            continue;
        }
        let mut l = line.to_string();
        for (h, f) in fills {
            l = l.replace(h.as_str(), f);
        }
        out.push(l);
    }
    out.join("\n")
}

/// Every window that some hole assignment turns into the same canonical code.
fn oracle(pattern: &str, target: &Ast) -> BTreeMap<(usize, usize), ()> {
    let k = parse_template(pattern).unwrap().body.len();
    let vars: Vec<&str> = [":[[v0]]", ":[[v1]]", ":[[s0]]"].into_iter().filter(|h| pattern.contains(h)).collect();
    let mut found = BTreeMap::new();
    for (li, list) in target.statement_lists().into_iter().enumerate() {
        if list.len() < k {
            continue;
        }
        for first in 0..=list.len() - k {
            let window: &[Stmt] = &list[first..first + k];
            let want = print_stmts(window);
            let mut exprs = BTreeSet::new();
            let mut stmts = BTreeSet::new();
            for s in window {
                s.walk_exprs(&mut |e| {
                    let t = print_expr(e);
                    exprs.insert(if needs_parens(&e.kind) { format!("({})", t) } else { t });
                });
                s.walk_stmts(&mut |s| {
                    stmts.insert(print_stmts(std::slice::from_ref(s)));
                });
            }
            let pools: Vec<Vec<String>> = vars
                .iter()
                .map(|v| if *v == ":[[s0]]" { stmts.iter().cloned().collect() } else { exprs.iter().cloned().collect() })
                .collect();
            if pools.iter().any(|p| p.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; vars.len()];
            'search: loop {
                let fills: BTreeMap<String, String> = vars.iter().zip(&idx).enumerate().map(|(j, (v, &i))| (v.to_string(), pools[j][i].clone())).collect();
                if let Ok(ast) = parse_fragment(&substitute(pattern, &fills)) {
                    if print_canonical(&ast) == want {
                        found.insert((li, first), ());
                        break 'search;
                    }
                }
                let mut j = 0;
                loop {
                    if j == idx.len() {
                        break 'search;
                    }
                    idx[j] += 1;
                    if idx[j] < pools[j].len() {
                        break;
                    }
                    idx[j] = 0;
                    j += 1;
                }
            }
        }
    }
    found
}

fn binding_reproduces(pattern: &str, target: &Ast, m: &MatchBinding) -> bool {
    let list = target.statement_lists()[m.site.list];
    let want = print_stmts(&list[m.site.first..m.site.first + m.site.len]);
    let fills: BTreeMap<String, String> = m
        .vars
        .iter()
        .map(|(v, b)| {
            let text = match b {
                morphweave::template::Bound::Expr(e) if needs_parens(&e.kind) => format!("({})", b.text()),
                _ => b.text(),
            };
            (format!(":[[{}]]", v), text)
        })
        .collect();
    parse_fragment(&substitute(pattern, &fills)).map(|a| print_canonical(&a) == want).unwrap_or(false)
}

pub fn matcher_agrees_with_brute_force(cases: usize) {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(21), store_holes: BTreeSet::new() };
    let mut total_matches = 0;
    for case in 0..cases {
        let pattern = g.pattern();
        let program = g.program(&pattern);
        let target = parse_fragment(&program).unwrap_or_else(|e| panic!("case {}: {}\n{}", case, e, program));
        let pat = parse_template(&pattern).unwrap();
        let got = find_matches_in(&pat.body, &target);
        let got_sites: BTreeMap<(usize, usize), ()> = got.iter().map(|m| ((m.site.list, m.site.first), ())).collect();
        let want = oracle(&pattern, &target);
        assert_eq!(got_sites, want, "case {}\npattern:\n{}\nprogram:\n{}", case, pattern, program);
        for m in &got {
            assert!(binding_reproduces(&pattern, &target, m), "case {}: binding {:?}", case, m.vars);
        }
        total_matches += got.len();
    }
    // the generator must actually exercise matching
    assert!(total_matches > cases * 3 / 5, "only {} matches", total_matches);
}

pub fn rewrites_parse() {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(22), store_holes: BTreeSet::new() };
    let mut rewritten = 0;
    for _ in 0..300 {
        let pattern = g.pattern();
        let program = g.program(&pattern);
        let mut rhs = Vec::new();
        let args: Vec<&str> = [":[[v0]]", ":[[v1]]"].into_iter().filter(|h| pattern.contains(h)).collect();
        rhs.push(format!("r = h({})", args.join(", ")));
        if pattern.contains(":[[s0]]") {
            rhs.push(":[[s0]]".into());
        }
        let rule = parse_rule(&format!("{}\n=>\n{}", pattern, rhs.join("\n"))).unwrap();
        let target = parse_fragment(&program).unwrap();
        let mut chosen: Vec<MatchBinding> = Vec::new();
        for m in find_matches(&rule, &target) {
            if chosen.iter().all(|c| !c.site.overlaps(&m.site)) {
                chosen.push(m);
            }
        }
        let edits: Vec<_> = chosen.iter().map(|m| (&rule, m)).collect();
        let out = rewrite_all(&edits, &program);
        let ast = parse_fragment(&out).unwrap_or_else(|e| panic!("{}\n{}\n=>\n{}", e, program, out));
        // printing is a fixed point
        assert_eq!(print_canonical(&parse_fragment(&print_canonical(&ast)).unwrap()), print_canonical(&ast));
        rewritten += chosen.len();
    }
    assert!(rewritten > 100);
}

pub fn statement_holes_bind_one_statement() {
    let pat = parse_template("for x in xs:\n    :[[s0]]").unwrap();
    let two = parse_fragment("for x in xs:\n    a = 1\n    b = 2").unwrap();
    assert!(find_matches_in(&pat.body, &two).is_empty());
    let one = parse_fragment("for x in xs:\n    a = 1").unwrap();
    assert_eq!(find_matches_in(&pat.body, &one).len(), 1);
    assert!(matches!(pat.body[0].kind, StmtKind::For { .. }));
}
