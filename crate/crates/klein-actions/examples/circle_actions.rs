//! One-dimensional actions: the simplest line action, its one-point
//! compactification with the fixed-point-structure check, and the circle
//! action of the crystallographic group where b has rotation number 1/2.
//!
//! ```text
//! cargo run --example circle_actions
//! ```

use klein_actions::line_circle::{
    circle_dist, compactified_line_action, fixed_point_structure_check, g1_circle_generators,
    line_action_generators, rotation_number, CircleMap,
};

fn main() {
    println!("=== The simplest line action: a(x) = x + 1, b the sine flow ===");
    let (a, b) = line_action_generators();
    println!("  b(0)   = {}", b.eval(0.0));
    println!("  b(1/2) = {:.6}", b.eval(0.5));
    println!(
        "  b(3/2) = {:.6}   (pushed left on the odd interval)",
        b.eval(1.5)
    );
    let conj = a.compose(&b).compose(&a.inverse());
    let sup = (0..=600)
        .map(|k| -3.0 + 6.0 * k as f64 / 600.0)
        .map(|x| (conj.eval(x) - b.inverse().eval(x)).abs())
        .fold(0.0f64, f64::max);
    println!("  sup |a b a⁻¹ - b⁻¹| on [-3, 3]: {sup:.2e}");

    println!("\n=== One-point compactification: fixed-point structure ===");
    let (ca, cb) = compactified_line_action();
    let report = fixed_point_structure_check(&ca, &cb, 2048);
    println!("  status: {:?} ({})", report.status, report.detail);
    println!(
        "  a fixes {} point(s), b fixes {} points; every a-gap holds a b-fixed point",
        report.a_fixed.len(),
        report.b_fixed.len()
    );

    println!("\n=== The crystallographic circle action ===");
    let (ga, gb) = g1_circle_generators();
    println!("  ρ(a) = {:.6}", rotation_number(&ga, 10_000));
    println!("  ρ(b) = {:.6}", rotation_number(&gb, 10_000));
    let grid = 1024;
    let sup_pair = |f: &CircleMap, g: &CircleMap| {
        (0..grid)
            .map(|k| {
                let x = k as f64 / grid as f64;
                circle_dist(f.lift(x), g.lift(x))
            })
            .fold(0.0f64, f64::max)
    };
    let rel1 = sup_pair(
        &CircleMap::compose_all(vec![ga.clone(), gb.compose(&gb), ga.inverse()]),
        &gb.inverse().compose(&gb.inverse()),
    );
    let rel2 = sup_pair(
        &CircleMap::compose_all(vec![gb.clone(), ga.compose(&ga), gb.inverse()]),
        &ga.inverse().compose(&ga.inverse()),
    );
    println!("  sup |a b² a⁻¹ - b⁻²| on the grid: {rel1:.2e}");
    println!("  sup |b a² b⁻¹ - a⁻²| on the grid: {rel2:.2e}");
}
