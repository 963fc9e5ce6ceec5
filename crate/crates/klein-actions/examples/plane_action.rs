//! The lifted free action on the universal cover of the punctured plane:
//! the quarter-turn lift a and the squeeze lift b, the deck translation,
//! and the sampled relation/freeness report.
//!
//! ```text
//! cargo run --example plane_action
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use klein_actions::klein_group::BsElement;
use klein_actions::plane_model::{matrix_action, model_apply, verify_relation, PlanePoint};

fn main() {
    println!("=== Generator actions in (θ, r) coordinates ===");
    let x = PlanePoint::new(0.0, 5.0);
    println!(
        "  a(0, 5)   = {:?}",
        pt(model_apply(BsElement::new(1, 0), x).unwrap())
    );
    println!(
        "  b(0, 5)   = {:?}   (down by ln 2)",
        pt(model_apply(BsElement::new(0, 1), x).unwrap())
    );
    let y = PlanePoint::new(std::f64::consts::FRAC_PI_2, 0.0);
    println!(
        "  b(π/2, 0) = {:?}   (up by ln 2 on the odd line)",
        pt(model_apply(BsElement::new(0, 1), y).unwrap())
    );
    let z = PlanePoint::new(0.3, -1.0);
    println!(
        "  a⁴(0.3,-1) = {:?}  (the deck translation θ + 2π)",
        pt(model_apply(BsElement::new(4, 0), z).unwrap())
    );

    println!("\n=== The lift projects onto the linear action downstairs ===");
    let g = BsElement::new(1, 2);
    let p = PlanePoint::new(0.8, 0.4);
    let upstairs = model_apply(g, p).unwrap().project();
    let downstairs = matrix_action(g, p.project());
    println!("  g = {g} at (0.8, 0.4):");
    println!(
        "    project(lift image) = [{:+.6}, {:+.6}]",
        upstairs[0], upstairs[1]
    );
    println!(
        "    matrix · projection = [{:+.6}, {:+.6}]",
        downstairs[0], downstairs[1]
    );

    println!("\n=== Relation and freeness over 10 000 seeded samples ===");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let report = verify_relation(10_000, 1e-9, &mut rng);
    println!(
        "  sup |a b a⁻¹ - b⁻¹| = {:.3e}  (tolerance {:.0e})",
        report.sup_relation_error, report.tol
    );
    println!(
        "  smallest displacement among a^p b^q, 0 < |p|+|q| ≤ 6: {:.4} at a^{} b^{}",
        report.min_displacement, report.worst_element.p, report.worst_element.q
    );
    println!("  verdict: {}", if report.pass { "PASS" } else { "FAIL" });
}

fn pt(p: PlanePoint) -> (f64, f64) {
    ((p.theta * 1e6).round() / 1e6, (p.r * 1e6).round() / 1e6)
}
