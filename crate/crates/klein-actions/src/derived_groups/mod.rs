//! The two derived groups: the three-generator group
//! `G2 = ⟨α, β, γ | αβα⁻¹ = β⁻¹, βγβ⁻¹ = γ⁻¹⟩` with its normal form and
//! left-invariant order, and the crystallographic group
//! `G1 = ⟨α, β | βα²β⁻¹ = α⁻², αβ²α⁻¹ = β⁻²⟩` realized by exact rational
//! affine isometries of 3-space.

mod g1;
mod g2;

pub use g1::{
    affine_compose, g1_ball, g1_element_order, g1_eval, g1_generator, AffineIso3, ElementOrder,
    G1Generator, Rational, SignDiag,
};
pub use g2::{g2_compare, g2_inverse, g2_multiply, g2_omega, g2_rewrite, G2Element, G2Order};
