//! Normal forms in the Klein bottle group ⟨a, b | a b a⁻¹ = b⁻¹⟩.
//!
//! Every element is a unique `a^p b^q`; the product law is closed-form and a
//! letter-rewriting oracle computes the same normal form independently.
//!
//! ```text
//! cargo run --example bs_arithmetic
//! ```

use klein_actions::free_words::{Alphabet, ReducedWord};
use klein_actions::klein_group::{
    bs_inverse, bs_multiply, bs_pow, bs_reduce, bs_subgroup_membership, BsElement, BsSubgroup,
};

fn main() {
    println!("=== Normal forms from raw words ===");
    for raw in ["bab", "aba^-1b", "b^2a^-1", "a^3 b^-2 a^-1 b"] {
        let word = ReducedWord::parse(&Alphabet::bs(), raw).unwrap();
        let nf = bs_reduce(&word).unwrap();
        println!("  {raw:>16}  ->  {nf}");
    }

    println!("\n=== The product law (p, q)·(p', q') = (p + p', (-1)^p' q + q') ===");
    let x = BsElement::new(0, 1); // b
    let y = BsElement::new(1, 0); // a
    println!("  b · a = {}", bs_multiply(x, y).unwrap());
    println!("  inverse of a b: {}", bs_inverse(BsElement::new(1, 1)));

    println!("\n=== Squares of odd-turn elements collapse ===");
    for (p, q) in [(1, 3), (3, -2), (-1, 5)] {
        let g = BsElement::new(p, q);
        println!("  ({g})^2 = {}", bs_multiply(g, g).unwrap());
    }

    println!("\n=== Index-2 subgroups ===");
    for (p, q) in [(2, 5), (1, 0), (3, 2)] {
        let g = BsElement::new(p, q);
        println!(
            "  {g}: in <a^2, b>? {:5}  in <a, b^2>? {}",
            bs_subgroup_membership(g, BsSubgroup::EvenAAndB),
            bs_subgroup_membership(g, BsSubgroup::AAndEvenB),
        );
    }

    println!("\n=== No torsion at desk scale ===");
    let g = BsElement::new(1, -2);
    let powers: Vec<String> = (1..=6).map(|n| bs_pow(g, n).unwrap().to_string()).collect();
    println!("  powers of {g}: {}", powers.join(", "));
}
