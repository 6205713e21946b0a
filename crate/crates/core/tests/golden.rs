mod checks;

use checks::golden;

#[test]
fn human_rule_round_trip() {
    golden::human_rule_round_trip();
}

#[test]
fn variant_rule_round_trip() {
    golden::variant_rule_round_trip();
}

#[test]
fn variant_only_names_take_llm_types() {
    golden::variant_only_names_take_llm_types();
}

#[test]
fn triad() {
    golden::triad();
}
