//! The crystallographic group ⟨α, β | βα²β⁻¹ = α⁻², αβ²α⁻¹ = β⁻²⟩ carried by
//! exact rational affine isometries of 3-space.
//!
//! ```text
//! cargo run --example g1_isometries
//! ```

use klein_actions::derived_groups::{
    g1_ball, g1_element_order, g1_eval, g1_generator, ElementOrder, G1Generator,
};
use klein_actions::free_words::{Alphabet, ReducedWord};

fn main() {
    let alpha = g1_generator(G1Generator::Alpha);
    let beta = g1_generator(G1Generator::Beta);
    println!("=== Generators ===");
    println!("  α = {alpha}");
    println!("  β = {beta}");

    println!("\n=== Squares are unit translations ===");
    println!("  α² = {}", alpha.pow(2));
    println!("  β² = {}", beta.pow(2));
    println!("  (αβ)² = {}", alpha.compose(&beta).pow(2));

    println!("\n=== Defining relations hold exactly ===");
    let lhs1 = beta.compose(&alpha.pow(2)).compose(&beta.inverse());
    println!(
        "  βα²β⁻¹ = {}   (= α⁻²? {})",
        lhs1,
        lhs1 == alpha.pow(2).inverse()
    );
    let lhs2 = alpha.compose(&beta.pow(2)).compose(&alpha.inverse());
    println!(
        "  αβ²α⁻¹ = {}   (= β⁻²? {})",
        lhs2,
        lhs2 == beta.pow(2).inverse()
    );

    println!("\n=== Word evaluation ===");
    for s in ["ab", "ba^2b^-1", "abab"] {
        let word = ReducedWord::parse(&Alphabet::g1_raw(), s).unwrap();
        println!("  {s:>8} -> {}", g1_eval(&word).unwrap());
    }

    println!("\n=== Torsion on the radius-6 generator ball ===");
    let ball = g1_ball(6);
    let infinite = ball
        .iter()
        .filter(|f| g1_element_order(f) == ElementOrder::Infinite)
        .count();
    println!(
        "  {} distinct elements; {} of infinite order, {} identity",
        ball.len(),
        infinite,
        ball.len() - infinite
    );
}
