//! Monotone self-maps of the line with closed-form evaluators.
//!
//! The simplest nontrivial action on the line takes `a(x) = x + 1` and for
//! `b` the time-1 flow of the vector field `v(x) = sin(πx)`:
//!
//! ```text
//! b(x) = (2/π) · atan(e^{πt} · tan(πx/2))   on (0, 1), extended by
//! b(x + 2) = b(x) + 2,   b(x + 1) = b⁻¹(x) + 1,   b(-x) = -b(x).
//! ```
//!
//! Integers are fixed, the flow pushes right on `(2k, 2k+1)` and left on
//! `(2k+1, 2k+2)`, and since translating the field by one unit negates it,
//! `a b a⁻¹ = b⁻¹` holds identically. The odd symmetry `b(-x) = -b(x)` is
//! what the two-interval circle construction needs of its building block.

use serde::Serialize;
use std::f64::consts::PI;

/// A strictly increasing bijection of the line in closed form.
#[derive(Clone, Debug, Serialize)]
pub enum LineMap {
    /// `x ↦ x + c`.
    Translation(f64),
    /// Time-`time` flow of `v(x) = sin(πx)`.
    SineFlow { time: f64 },
    /// Right-to-left composition: `Composite([f, g])` is `f ∘ g`.
    Composite(Vec<LineMap>),
}

impl LineMap {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            LineMap::Translation(c) => x + c,
            LineMap::SineFlow { time } => sine_flow(*time, x),
            LineMap::Composite(maps) => maps.iter().rev().fold(x, |acc, m| m.eval(acc)),
        }
    }

    /// Exact inverse, in closed form.
    pub fn inverse(&self) -> LineMap {
        match self {
            LineMap::Translation(c) => LineMap::Translation(-c),
            LineMap::SineFlow { time } => LineMap::SineFlow { time: -time },
            LineMap::Composite(maps) => {
                LineMap::Composite(maps.iter().rev().map(LineMap::inverse).collect())
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LineMap) -> LineMap {
        LineMap::Composite(vec![self.clone(), other.clone()])
    }
}

/// Time-`t` flow of `sin(πx)`, reduced to the fundamental domain `[0, 2)`.
fn sine_flow(t: f64, x: f64) -> f64 {
    let base = 2.0 * (x / 2.0).floor();
    let y = x - base;
    debug_assert!((0.0..2.0).contains(&y) || y.is_nan());
    let flowed = if y == 0.0 || y == 1.0 {
        y
    } else if y < 1.0 {
        flow_unit(t, y)
    } else {
        // on (1, 2) the field is the negated unit field
        1.0 + flow_unit(-t, y - 1.0)
    };
    base + flowed
}

/// The flow on the invariant interval (0, 1).
fn flow_unit(t: f64, y: f64) -> f64 {
    let z = (PI * t).exp() * (PI * y / 2.0).tan();
    (2.0 / PI) * z.atan()
}

/// Generators of the simplest line action: the unit translation and the
/// time-1 sine flow.
pub fn line_action_generators() -> (LineMap, LineMap) {
    (LineMap::Translation(1.0), LineMap::SineFlow { time: 1.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_are_fixed() {
        let (_, b) = line_action_generators();
        for k in -5..=5 {
            assert_eq!(b.eval(k as f64), k as f64);
        }
    }

    #[test]
    fn midpoint_value() {
        let (_, b) = line_action_generators();
        let expected = (2.0 / PI) * PI.exp().atan();
        assert!((b.eval(0.5) - expected).abs() < 1e-15);
        assert!((expected - 0.9725).abs() < 1e-4);
    }

    #[test]
    fn conjugation_by_the_translation_inverts_the_flow() {
        let (a, b) = line_action_generators();
        let lhs = a.compose(&b).compose(&a.inverse());
        let rhs = b.inverse();
        let mut sup: f64 = 0.0;
        for k in 0..=600 {
            let x = -3.0 + 6.0 * k as f64 / 600.0;
            sup = sup.max((lhs.eval(x) - rhs.eval(x)).abs());
        }
        assert!(sup < 1e-9, "sup={sup}");
    }

    #[test]
    fn odd_symmetry() {
        let (_, b) = line_action_generators();
        for k in 0..=400 {
            let x = -2.0 + 4.0 * k as f64 / 400.0;
            assert!((b.eval(-x) + b.eval(x)).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn flow_direction_alternates() {
        let (_, b) = line_action_generators();
        assert!(b.eval(0.5) > 0.5);
        assert!(b.eval(1.5) < 1.5);
        assert!(b.eval(2.5) > 2.5);
    }

    #[test]
    fn inverse_round_trip() {
        let (_, b) = line_action_generators();
        let binv = b.inverse();
        for k in 0..=100 {
            let x = -2.0 + 4.0 * k as f64 / 100.0;
            assert!((binv.eval(b.eval(x)) - x).abs() < 1e-10);
        }
    }

    #[test]
    fn flow_times_add() {
        let b1 = LineMap::SineFlow { time: 0.4 };
        let b2 = LineMap::SineFlow { time: 0.6 };
        let b = LineMap::SineFlow { time: 1.0 };
        for k in 0..=100 {
            let x = -1.0 + 2.0 * k as f64 / 100.0;
            assert!((b1.eval(b2.eval(x)) - b.eval(x)).abs() < 1e-12);
        }
    }
}
