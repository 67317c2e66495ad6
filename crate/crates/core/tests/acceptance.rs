//! The release gate: each test runs one named invariant grid and prints a
//! single pass/fail line (visible with --nocapture or on failure).

use quatmult_core::selftest::{self, CheckResult};

fn report(index: usize, result: CheckResult) {
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!("acceptance {index:02} {}: {status} ({})", result.name, result.detail);
    assert!(result.passed, "{}: {}", result.name, result.detail);
}

#[test]
fn acceptance_01_irreducible_census() {
    report(1, selftest::irrep_census());
}

#[test]
fn acceptance_02_central_character_fibers() {
    report(2, selftest::central_character_fibers());
}

#[test]
fn acceptance_03_ramified_reduction_dimensions() {
    report(3, selftest::ramified_reduction_dimensions());
}

#[test]
fn acceptance_04_symmetric_power_oracle() {
    report(4, selftest::sym_reduction_oracle());
}

#[test]
fn acceptance_05_tensor_oracle() {
    report(5, selftest::tensor_oracle());
}

#[test]
fn acceptance_06_multiplicity_tables() {
    report(6, selftest::mu_tables());
}

#[test]
fn acceptance_07_extension_sum_rule() {
    report(7, selftest::extension_sum_rule());
}

#[test]
fn acceptance_08_two_dim_support_sign_symmetry() {
    report(8, selftest::two_dim_support_sign_symmetry());
}

#[test]
fn acceptance_09_forced_sign() {
    report(9, selftest::forced_sign());
}

#[test]
fn acceptance_10_companion_existence() {
    report(10, selftest::companion_existence());
}
