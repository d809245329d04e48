//! Geometry batteries: intersection duality on 500 general-position
//! pairs, the dominant sub-simplex density bound, the three-way
//! Freudenthal count, and the Brouwer residual schedule.

use scarf::suite::{brouwer_monotone_suite, density_suite, duality_suite, freudenthal_suite};

#[test]
fn boundary_duality_on_500_pairs() {
    let report = duality_suite(23, 500);
    assert_eq!(report.cases, 500);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn dominant_density_bound() {
    let report = density_suite(&[2, 3, 4, 5]);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn freudenthal_three_way_counts() {
    let report = freudenthal_suite(3, 4);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn brouwer_residuals_are_monotone() {
    let report = brouwer_monotone_suite();
    assert!(report.passed(), "{:?}", report.failures.first());
}
