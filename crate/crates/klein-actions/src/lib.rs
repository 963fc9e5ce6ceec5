//! Exact arithmetic and desk-scale dynamics for the Klein bottle group
//! `BS(1,-1) = ⟨a, b | a b a⁻¹ = b⁻¹⟩` and two of its relatives.
//!
//! The crate has three layers:
//!
//! * **Algebra.** Normal forms and exact products for `BS(1,-1)`
//!   ([`klein_group`]), for the three-generator group
//!   `G2 = ⟨α, β, γ | αβα⁻¹ = β⁻¹, βγβ⁻¹ = γ⁻¹⟩` together with a
//!   left-invariant total order ([`derived_groups`]), and for the
//!   crystallographic group `G1 = ⟨α, β | βα²β⁻¹ = α⁻², αβ²α⁻¹ = β⁻²⟩`
//!   carried by exact rational affine isometries ([`derived_groups`]).
//!   Freely reduced words and the truncated series order on the rank-2 free
//!   group live in [`free_words`].
//! * **Plane dynamics.** The explicit free action of `BS(1,-1)` on the
//!   universal cover of the punctured plane, the half-integer index of the
//!   `b`-map relative to powers of the quarter-turn, disk wandering and
//!   non-wandering searches, and a bounded-iteration limit-set estimator
//!   ([`plane_model`]).
//! * **Line and circle dynamics.** The simplest one-dimensional action, its
//!   one-point compactification, a circle action of `G1` with rotation
//!   number 1/2, and rotation-number computation ([`line_circle`]).
//!
//! The [`verify`] module bundles the numbered acceptance checks that the
//! `acceptance` integration test and the `verify all` CLI subcommand run.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example bs_arithmetic      # normal forms in BS(1,-1)
//! cargo run --example g2_normal_form    # G2 rewriting, products, the order
//! cargo run --example g1_isometries     # exact crystallographic arithmetic
//! cargo run --example plane_action      # the lifted plane action
//! cargo run --example index_invariant   # half-integer index I(b, a^k)
//! cargo run --example wandering_disks   # virtual wandering + the exception
//! cargo run --example limit_sets        # limit-set estimation, CSV export
//! cargo run --example circle_actions    # line/circle actions, rotation numbers
//! ```
//!
//! A thin CLI over the same operations is built as the `klein-actions` binary;
//! see `klein-actions --help`.

pub mod derived_groups;
pub mod error;
pub mod free_words;
pub mod klein_group;
pub mod line_circle;
pub mod plane_model;
pub mod verify;

pub use error::Error;
pub use free_words::{Alphabet, ReducedWord, TruncatedSeries};
pub use klein_group::{BsElement, BsSubgroup};

pub use derived_groups::{AffineIso3, ElementOrder, G1Generator, G2Element, G2Order, SignDiag};
pub use plane_model::{CurveSample, Disk, ModelMap, PlaneMap, PlanePoint, PointCloud};

pub use line_circle::{CircleMap, LineMap};
