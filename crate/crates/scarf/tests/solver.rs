//! Solver batteries: path-following terminals live inside the brute-force
//! solution sets, and every brute-force coloring theorem reports an odd
//! solution count on random instances.

use scarf::suite::{odd_count_suite, path_brute_suite};

#[test]
fn path_matches_brute_on_100_instances() {
    let report = path_brute_suite(19, 100);
    assert_eq!(report.cases, 100);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn odd_counts_on_random_instances() {
    // 800 cases cycle through the four theorems, 200 instances each
    let report = odd_count_suite(19, 800);
    assert_eq!(report.cases, 800);
    assert!(report.passed(), "{:?}", report.failures.first());
}
