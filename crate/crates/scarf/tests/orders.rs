//! Pivot parity at scale: every face of every dominance complex admits
//! exactly two moves, across 200 random order families.

use scarf::suite::orders_parity_suite;

#[test]
fn pivot_parity_on_200_families() {
    let report = orders_parity_suite(13, 200, false);
    assert!(report.cases > 200, "too few faces exercised");
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn mutated_parity_is_rejected() {
    let report = orders_parity_suite(13, 20, true);
    assert!(!report.passed());
}
