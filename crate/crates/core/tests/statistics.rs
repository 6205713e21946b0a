mod checks;

use checks::stats;

#[test]
fn wilcoxon_exact_matches_enumeration() {
    stats::wilcoxon_exact_matches_enumeration();
}

#[test]
fn hodges_lehmann_matches_walsh_median() {
    stats::hodges_lehmann_matches_walsh_median();
}

#[test]
fn f_measure_identities() {
    stats::f_measure_identities();
}
