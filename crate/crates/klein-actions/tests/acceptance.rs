//! Acceptance gate: every numbered criterion must pass at its pinned
//! tolerance. Run with `--nocapture` to see one line per criterion:
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

use klein_actions::verify::run_criterion;

const SEED: u64 = 0;

fn check(id: u32) {
    let report = run_criterion(id, SEED);
    println!("{}", report.line());
    assert!(report.pass, "{}", report.line());
}

#[test]
fn criterion_01_bs_normal_form_vs_rewriting() {
    check(1);
}

#[test]
fn criterion_02_odd_power_squares_collapse() {
    check(2);
}

#[test]
fn criterion_03_g2_product_law_vs_oracle() {
    check(3);
}

#[test]
fn criterion_04_g1_relations_and_torsion() {
    check(4);
}

#[test]
fn criterion_05_model_relation_and_freeness() {
    check(5);
}

#[test]
fn criterion_06_index_values() {
    check(6);
}

#[test]
fn criterion_07_index_conjugacy_invariance() {
    check(7);
}

#[test]
fn criterion_08_virtual_wandering() {
    check(8);
}

#[test]
fn criterion_09_nonwandering_witness() {
    check(9);
}

#[test]
fn criterion_10_circle_actions() {
    check(10);
}

#[test]
fn criterion_11_g2_order_laws() {
    check(11);
}

#[test]
fn criterion_12_limit_set_sanity() {
    check(12);
}
