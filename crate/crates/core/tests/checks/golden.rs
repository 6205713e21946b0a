//! Golden rule round-trips and the applicability triad.



use std::collections::{BTreeMap, HashMap, HashSet};

use morphweave::applicability::{is_applicable, FailedRule};
use morphweave::cpat::Cpat;
use morphweave::rulegen::human_rule;
use morphweave::synthesis::synthesize_from_variant;
use morphweave::syntax::parse_fragment;
use morphweave::template::{check_guards, find_matches, rewrite};

const CPAT1: &str = r#"{
  "id": "cpat-1",
  "lhs": "result = 0\nfor elem in elements:\n    result = elem + result",
  "rhs": "result = numpy.sum(elements)",
  "input_vars": [{"name": "elements", "type": "List[int]"}],
  "output_vars": ["result"],
  "imports": ["numpy"],
  "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]}
}"#;

const INDEXED_LOOP: &str = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]";
const SUM_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in :[[v2]]:\n    :[[v0]] = :[[v1]] + :[[v0]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]\n";
const INDEXED_RULE: &str = ":[[v0]] = 0\nfor :[[v1]] in range(len(:[[v2]])):\n    :[[v0]] += :[[v2]][:[[v1]]]\n=>\n:[[v0]] = numpy.sum(:[[v2]])\nguard :[[v2]] type List[int]\n";

fn cpat() -> Cpat {
    Cpat::from_json(CPAT1, "cpat-1.json").unwrap()
}

fn apply_once(rule: &morphweave::template::RewriteRule, src: &str, env: &[(&str, &str)]) -> String {
    let ast = parse_fragment(src).unwrap();
    let m = find_matches(rule, &ast);
    assert_eq!(m.len(), 1, "exactly one site in {:?}", src);
    let env: HashMap<String, String> = env.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(check_guards(&m[0], &rule.guards, &env, &HashSet::new()), Ok(true));
    rewrite(rule, &m[0], src)
}

pub fn human_rule_round_trip() {
    let rule = human_rule(&cpat()).unwrap();
    assert_eq!(rule.with_numbered_vars().serialize(), SUM_RULE);
    let renamed = "total = 0\nfor x in xs:\n    total = x + total";
    assert_eq!(apply_once(&rule, renamed, &[("xs", "List[int]")]), "total = numpy.sum(xs)");
}

pub fn variant_rule_round_trip() {
    let rule = synthesize_from_variant(INDEXED_LOOP, &cpat(), &BTreeMap::new(), "cpat-1.v1").unwrap().rule;
    assert_eq!(rule.with_numbered_vars().serialize(), INDEXED_RULE);
    assert_eq!(apply_once(&rule, INDEXED_LOOP, &[("losses", "List[int]")]), "loss = numpy.sum(losses)");
}

pub fn variant_only_names_take_llm_types() {
    let types: BTreeMap<String, String> = [("losses", "List[int]"), ("loss", "int"), ("i", "int")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let rule = synthesize_from_variant(INDEXED_LOOP, &cpat(), &types, "cpat-1.v1").unwrap().rule;
    let want = INDEXED_RULE.replace("guard :[[v2]]", "guard :[[v1]] type int\nguard :[[v2]]");
    assert_eq!(rule.with_numbered_vars().serialize(), want);
}

pub fn failed(code: &str) -> Vec<FailedRule> {
    is_applicable(&parse_fragment(code).unwrap(), &cpat()).unwrap().failed_rules
}

pub fn triad() {
    assert!(failed(INDEXED_LOOP).is_empty());
    // drops the loop; also smaller than the RHS, so the count-sign rule fires too
    assert_eq!(failed("result = sum(elements)"), vec![FailedRule::ControlNodes, FailedRule::NodeCountSign]);
    assert_eq!(
        failed("def compute(elements):\n    return sum(elements)\nresult = compute(elements)"),
        vec![FailedRule::ControlNodes, FailedRule::Declarations]
    );
}
