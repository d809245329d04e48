//! Chain algebra under load: boundary squared, the Leibniz rule, and
//! naturality on a thousand random cases.

use scarf::suite::chains_suite;

#[test]
fn thousand_random_cases() {
    let start = std::time::Instant::now();
    let report = chains_suite(11, 1000);
    assert_eq!(report.cases, 1000);
    assert!(report.passed(), "{:?}", report.failures.first());
    assert!(start.elapsed().as_secs() < 5, "took {:?}", start.elapsed());
}
