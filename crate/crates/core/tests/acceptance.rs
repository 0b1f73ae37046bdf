//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::sync::OnceLock;

use dcomplete::suite::{CriterionResult, Suite};

const SEED: u64 = 7;

fn suite() -> &'static Suite {
    static SUITE: OnceLock<Suite> = OnceLock::new();
    SUITE.get_or_init(|| Suite::new(SEED).expect("catalog posets are d-complete"))
}

fn run(id: usize) {
    let result: CriterionResult = suite().criterion(id);
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_01_hook_length_count() {
    run(1);
}

#[test]
fn criterion_02_multivariate_identity() {
    run(2);
}

#[test]
fn criterion_03_worked_rsk_example() {
    run(3);
}

#[test]
fn criterion_04_diagonal_sums() {
    run(4);
}

#[test]
fn criterion_05_order_independence() {
    run(5);
}

#[test]
fn criterion_06_volume_preservation() {
    run(6);
}

#[test]
fn criterion_07_polytope_bijection() {
    run(7);
}

#[test]
fn criterion_08_structural_oracles() {
    run(8);
}

#[test]
fn criterion_09_classical_correspondence() {
    run(9);
}

#[test]
fn criterion_10_monte_carlo_volumes() {
    run(10);
}
