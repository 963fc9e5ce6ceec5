//! The half-integer index I(b, a^k): total turning of the displacement field
//! of the squeeze lift along a curve joining a point to its distinguished
//! image, divided by 2π.
//!
//! ```text
//! cargo run --example index_invariant
//! ```

use klein_actions::klein_group::BsElement;
use klein_actions::plane_model::{
    index, index_along, index_curve, CurveSample, ModelMap, PlaneMap, PlanePoint,
};

fn main() {
    let b = ModelMap::b();
    let seed = PlanePoint::new(0.3, 0.7);

    println!("=== I(b, a^k) = -k/2 ===");
    for k in [-3i64, -2, -1, 1, 2, 3] {
        let v = index(&b, BsElement::new(k, 0), seed, 1e-6).unwrap();
        println!(
            "  k = {k:+}:  index = {:+.1}   (residual {:.1e}{})",
            v.value(),
            v.residual,
            if v.is_strict_half() {
                ", strict half-integer"
            } else {
                ""
            }
        );
    }

    println!("\n=== Independence of the seed ===");
    for seed in [PlanePoint::new(-2.0, 1.5), PlanePoint::new(7.0, -0.4)] {
        let v = index(&b, BsElement::new(1, 0), seed, 1e-6).unwrap();
        println!(
            "  seed ({:+.1}, {:+.1}): index = {:+.1}",
            seed.theta,
            seed.r,
            v.value()
        );
    }

    println!("\n=== Independence of the curve ===");
    let canonical = index_curve(&b, BsElement::new(1, 0), seed).unwrap();
    let end = canonical.points[1];
    let detour = CurveSample::new(vec![seed, PlanePoint::new(1.2, 3.0), end]).unwrap();
    let v = index_along(&b, &detour, 1e-6).unwrap();
    println!(
        "  polyline with a detour waypoint: index = {:+.1}",
        v.value()
    );

    println!("\n=== Invariance under conjugation commuting with the turn ===");
    let h = |p: PlanePoint| PlanePoint::new(p.theta, p.r + 0.3 * (4.0 * p.theta).sin());
    let h_inv = |p: PlanePoint| PlanePoint::new(p.theta, p.r - 0.3 * (4.0 * p.theta).sin());
    let conjugated = move |x: PlanePoint| h(b.apply(h_inv(x)));
    let v = index(&conjugated, BsElement::new(1, 0), seed, 1e-6).unwrap();
    println!("  undulated conjugate of b: index = {:+.1}", v.value());
}
