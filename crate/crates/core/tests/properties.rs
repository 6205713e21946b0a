mod checks;

use checks::props;

#[test]
fn ladder_only_climbs() {
    props::ladder_only_climbs(500);
}

#[test]
fn subset_chain() {
    props::subset_chain(500);
}

#[test]
fn matcher_agrees_with_brute_force() {
    props::matcher_agrees_with_brute_force(500);
}

#[test]
fn rewrites_parse() {
    props::rewrites_parse();
}

#[test]
fn statement_holes_bind_one_statement() {
    props::statement_holes_bind_one_statement();
}
