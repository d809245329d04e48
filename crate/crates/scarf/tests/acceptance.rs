//! Acceptance gate: one test per headline property, one pass/fail line
//! each, with tolerances pinned as constants below.

use num_traits::{Signed, ToPrimitive};
use scarf::geom::{brouwer_approximate, builtin_brouwer, builtin_kakutani, kakutani_approximate};
use scarf::suite::{
    axioms_suite, chains_suite, density_suite, duality_suite, freudenthal_suite, lex_oracle_suite,
    odd_count_suite, orders_parity_suite, path_brute_suite, SuiteReport,
};
use scarf::parse_rat;
use std::time::{Duration, Instant};

const SEED: u64 = 2026;
const BROUWER_GRID: i64 = 64;
const BROUWER_POINT_TOL: f64 = 1e-3; // max-norm distance to the barycenter
const BROUWER_RESIDUAL_TOL: f64 = 2.0 / BROUWER_GRID as f64; // twice the grid diameter
const KAKUTANI_GRID: i64 = 256;
const KAKUTANI_POINT_TOL: &str = "1/100"; // exact max-norm distance to the midpoint

fn gate(name: &str, ok: bool, detail: &str) {
    if ok {
        println!("PASS {name}");
    } else {
        println!("FAIL {name}: {detail}");
    }
    assert!(ok, "{name}: {detail}");
}

fn gate_suite(name: &str, report: &SuiteReport, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let detail = format!(
        "{} failures in {} cases ({elapsed:?}), first: {}",
        report.failures.len(),
        report.cases,
        report.failures.first().map(String::as_str).unwrap_or("-")
    );
    gate(name, report.passed() && elapsed < budget, &detail);
}

#[test]
fn acceptance_01_pivot_parity() {
    let start = Instant::now();
    let report = orders_parity_suite(SEED, 200, false);
    gate_suite("pivot parity r+s=2", &report, start, Duration::from_secs(10));
}

#[test]
fn acceptance_02_odd_counts() {
    let start = Instant::now();
    // 800 cases cycle through the four theorems, 200 instances each
    let report = odd_count_suite(SEED, 800);
    gate_suite("odd solution counts", &report, start, Duration::from_secs(60));
}

#[test]
fn acceptance_03_path_vs_brute() {
    let start = Instant::now();
    let report = path_brute_suite(SEED, 100);
    gate_suite("path vs brute", &report, start, Duration::from_secs(60));
}

#[test]
fn acceptance_04_circuit_axioms() {
    let start = Instant::now();
    let report = axioms_suite(SEED, 300);
    gate_suite("circuit axioms", &report, start, Duration::from_secs(60));
}

#[test]
fn acceptance_05_lex_oracle() {
    let start = Instant::now();
    let report = lex_oracle_suite(SEED, 100);
    gate_suite("lex extension oracle", &report, start, Duration::from_secs(60));
}

#[test]
fn acceptance_06_freudenthal_counts() {
    let start = Instant::now();
    let report = freudenthal_suite(3, 4);
    gate_suite(
        "Freudenthal three-way count",
        &report,
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_07_intersection_duality() {
    let start = Instant::now();
    let report = duality_suite(SEED, 500);
    gate_suite(
        "intersection duality",
        &report,
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_08_brouwer_rotation() {
    let start = Instant::now();
    let f = builtin_brouwer("rotation", 3).expect("builtin oracle");
    // eps 0 is never met strictly, so the full schedule down to 1/64 runs
    let rep = brouwer_approximate(&*f, 3, 0.0, BROUWER_GRID).expect("approximation runs");
    let third = parse_rat("1/3").unwrap();
    let dist = rep
        .point
        .iter()
        .map(|x| (x - &third).abs())
        .max()
        .unwrap();
    let near = dist.to_f64().unwrap_or(f64::INFINITY) <= BROUWER_POINT_TOL;
    let detail = format!(
        "grid {}, |x - bary| = {:.2e}, residual {:.2e} ({:?})",
        rep.grid,
        dist.to_f64().unwrap_or(f64::NAN),
        rep.residual,
        start.elapsed()
    );
    gate(
        "Brouwer rotation desk-scale",
        rep.grid == BROUWER_GRID
            && near
            && rep.residual <= BROUWER_RESIDUAL_TOL
            && start.elapsed() < Duration::from_secs(30),
        &detail,
    );
}

#[test]
fn acceptance_09_kakutani_switch() {
    let start = Instant::now();
    let f = builtin_kakutani("switch", 2).expect("builtin oracle");
    let rep = kakutani_approximate(&*f, 2, 0.0, KAKUTANI_GRID).expect("approximation runs");
    let half = parse_rat("1/2").unwrap();
    let tol = parse_rat(KAKUTANI_POINT_TOL).unwrap();
    let dist = rep
        .point
        .iter()
        .map(|x| (x - &half).abs())
        .max()
        .unwrap();
    let detail = format!("grid {}, |z - mid| = {} ({:?})", rep.grid, dist, start.elapsed());
    gate(
        "Kakutani switch desk-scale",
        rep.grid == KAKUTANI_GRID && dist <= tol && start.elapsed() < Duration::from_secs(30),
        &detail,
    );
}

#[test]
fn acceptance_10_chain_identities() {
    let start = Instant::now();
    // 3000 cases cycle through the three identities, 1000 each
    let report = chains_suite(SEED, 3000);
    gate_suite("chain identities", &report, start, Duration::from_secs(5));
}

#[test]
fn acceptance_extra_density_bound() {
    // not one of the headline gates, but cheap and load-bearing for the
    // approximation schedule: dominant sub-simplices shrink like 1/k
    let report = density_suite(&[2, 3, 4]);
    gate(
        "dominant density bound",
        report.passed(),
        report.failures.first().map(String::as_str).unwrap_or("-"),
    );
}
