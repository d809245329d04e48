//! Oriented-matroid batteries: circuit axioms on 300 random realizable
//! configurations, and the lexicographic extension against its numeric
//! perturbation oracle on 100 instances.

use scarf::suite::{axioms_suite, lex_oracle_suite};

#[test]
fn axioms_on_300_configurations() {
    let report = axioms_suite(17, 300);
    assert_eq!(report.cases, 300);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn lex_extension_matches_oracle_on_100_instances() {
    let report = lex_oracle_suite(17, 100);
    assert_eq!(report.cases, 100);
    assert!(report.passed(), "{:?}", report.failures.first());
}
