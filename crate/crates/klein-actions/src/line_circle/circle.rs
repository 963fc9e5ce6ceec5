//! Circle maps carried by their lifts, rotation numbers, and the common
//! fixed-point structure of anti-commuting pairs.
//!
//! A circle map is stored as a monotone lift `F` with `F(x + 1) = F(x) + 1`.
//! Two constructions are provided besides rigid rotations and composites:
//!
//! * [`CircleMap::one_point`]: the one-point compactification of a line map,
//!   charted by `u = 1/2 + atan(x)/π` with the extra point at `u = 0`;
//! * [`g1_circle_generators`]: the circle is glued from two copies of the
//!   extended line, charted onto `[0, 1/2]` and `[1/2, 1]` by
//!   `u = 1/4 ± atan(x)/(2π)` (the second copy carries the reversed
//!   orientation). The `a`-generator translates by one in each chart; the
//!   `b`-generator swaps the copies, acting as the rigid half-turn on the
//!   first and as the sine flow composed with the swap on the second. The
//!   pair satisfies `a b² a⁻¹ = b⁻²` and `b a² b⁻¹ = a⁻²`, and `b` has
//!   rotation number 1/2 while `a` fixes the two gluing points.

use serde::Serialize;
use std::f64::consts::PI;

use super::line::{line_action_generators, LineMap};

const TAU_CHART: f64 = 2.0 * PI;

/// An orientation-preserving circle homeomorphism, as a lift.
#[derive(Clone, Debug)]
pub struct CircleMap {
    kind: CircleKind,
}

#[derive(Clone, Debug)]
enum CircleKind {
    Rotation(f64),
    OnePoint(LineMap),
    G1 { which: G1CircleGen },
    Composite(Vec<CircleMap>),
    Inverse(Box<CircleMap>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum G1CircleGen {
    A,
    B,
}

// chart of the first copy: u = 1/4 + atan(x)/(2π) ∈ (0, 1/2)
fn chart1(x: f64) -> f64 {
    0.25 + x.atan() / TAU_CHART
}

fn unchart1(u: f64) -> f64 {
    (TAU_CHART * (u - 0.25)).tan()
}

// chart of the second copy: u = 3/4 - atan(x)/(2π) ∈ (1/2, 1)
fn unchart2(u: f64) -> f64 {
    (TAU_CHART * (0.75 - u)).tan()
}

impl CircleMap {
    pub fn rotation(c: f64) -> Self {
        CircleMap {
            kind: CircleKind::Rotation(c),
        }
    }

    /// One-point compactification of a line map; the point at infinity sits
    /// at `u = 0` and is fixed.
    pub fn one_point(map: LineMap) -> Self {
        CircleMap {
            kind: CircleKind::OnePoint(map),
        }
    }

    /// Right-to-left composition.
    pub fn compose_all(maps: Vec<CircleMap>) -> Self {
        CircleMap {
            kind: CircleKind::Composite(maps),
        }
    }

    pub fn compose(&self, other: &CircleMap) -> Self {
        Self::compose_all(vec![self.clone(), other.clone()])
    }

    pub fn inverse(&self) -> Self {
        match &self.kind {
            CircleKind::Rotation(c) => CircleMap::rotation(-c),
            CircleKind::OnePoint(m) => CircleMap::one_point(m.inverse()),
            CircleKind::Inverse(inner) => (**inner).clone(),
            _ => CircleMap {
                kind: CircleKind::Inverse(Box::new(self.clone())),
            },
        }
    }

    /// The lift evaluated at `x`; satisfies `lift(x + 1) = lift(x) + 1`.
    pub fn lift(&self, x: f64) -> f64 {
        match &self.kind {
            CircleKind::Rotation(c) => x + c,
            CircleKind::OnePoint(m) => {
                let base = x.floor();
                let u = x - base;
                if u == 0.0 {
                    return x;
                }
                base + 0.5 + m.eval((PI * (u - 0.5)).tan()).atan() / PI
            }
            CircleKind::G1 { which } => g1_lift(*which, x),
            CircleKind::Composite(maps) => maps.iter().rev().fold(x, |acc, m| m.lift(acc)),
            CircleKind::Inverse(inner) => invert_lift(inner, x),
        }
    }

    /// Displacement `lift(x) - x`, a 1-periodic function.
    pub fn displacement(&self, x: f64) -> f64 {
        self.lift(x) - x
    }
}

/// Monotone bisection for the inverse lift.
fn invert_lift(map: &CircleMap, target: f64) -> f64 {
    // bracket: lift(y) - y is 1-periodic hence bounded
    let d0 = map.lift(0.0);
    let mut lo = target - d0.abs() - 2.0;
    let mut hi = target + d0.abs() + 2.0;
    while map.lift(lo) > target {
        lo -= 1.0;
    }
    while map.lift(hi) < target {
        hi += 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if map.lift(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn g1_lift(which: G1CircleGen, x: f64) -> f64 {
    let base = x.floor();
    let u = x - base;
    let sine = LineMap::SineFlow { time: 1.0 };
    match which {
        G1CircleGen::A => {
            // translation by one in each chart; the gluing points 0, 1/2 stay
            let image = if u == 0.0 || u == 0.5 {
                u
            } else if u < 0.5 {
                chart1(unchart1(u) + 1.0)
            } else {
                0.75 - (unchart2(u) + 1.0).atan() / TAU_CHART
            };
            base + image
        }
        G1CircleGen::B => {
            // swap the copies: rigid half-turn off the second copy, sine flow
            // after the swap off the first
            if u < 0.5 {
                x + 0.5
            } else if u == 0.5 {
                base + 1.0
            } else {
                base + 1.0 + chart1(sine.eval(-unchart2(u)))
            }
        }
    }
}

/// The two circle generators of the crystallographic action.
pub fn g1_circle_generators() -> (CircleMap, CircleMap) {
    (
        CircleMap {
            kind: CircleKind::G1 {
                which: G1CircleGen::A,
            },
        },
        CircleMap {
            kind: CircleKind::G1 {
                which: G1CircleGen::B,
            },
        },
    )
}

/// Finite-time rotation number `(lift^n(0) - 0) / n`. For maps with periodic
/// points this lies within `2/n` of the exact rational rotation number.
pub fn rotation_number(f: &CircleMap, iterations: u32) -> f64 {
    assert!(
        iterations >= 1,
        "rotation_number needs at least one iterate"
    );
    let mut x = 0.0;
    for _ in 0..iterations {
        x = f.lift(x);
    }
    x / iterations as f64
}

/// Distance on the circle between two points given by lift values.
pub fn circle_dist(u: f64, v: f64) -> f64 {
    let d = (u - v).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// CSV rows `x, f(x) - x` over one period.
pub fn displacement_profile(f: &CircleMap, samples: usize) -> Vec<(f64, f64)> {
    (0..samples)
        .map(|k| {
            let x = k as f64 / samples as f64;
            (x, f.displacement(x))
        })
        .collect()
}

const RELATION_TOL: f64 = 1e-7;
const FIXED_POINT_TOL: f64 = 1e-7;

/// Detected fixed points of a circle map on `[0, 1)`, found on a grid by
/// displacement sign changes and near-zero values, refined by bisection.
pub fn fixed_points(f: &CircleMap, grid: usize) -> Vec<f64> {
    let wrapped = |x: f64| {
        let d = f.displacement(x);
        (d + 0.5).rem_euclid(1.0) - 0.5
    };
    let mut out: Vec<f64> = Vec::new();
    let mut push = |x: f64| {
        let x = x.rem_euclid(1.0);
        if out.iter().all(|&y| circle_dist(x, y) > 1e-6) {
            out.push(x);
        }
    };
    let mut prev = wrapped(0.0);
    for k in 0..grid {
        let x0 = k as f64 / grid as f64;
        let x1 = (k + 1) as f64 / grid as f64;
        let cur = wrapped(x1);
        if prev.abs() < FIXED_POINT_TOL {
            push(x0);
        } else if prev.signum() != cur.signum() && prev.abs() < 0.25 && cur.abs() < 0.25 {
            // bracketed zero of the wrapped displacement
            let (mut lo, mut hi) = (x0, x1);
            let lo_sign = prev.signum();
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if wrapped(mid).signum() == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if hi - lo < 1e-10 {
                    break;
                }
            }
            let root = 0.5 * (lo + hi);
            if wrapped(root).abs() < FIXED_POINT_TOL {
                push(root);
            }
        }
        prev = cur;
    }
    out.sort_by(f64::total_cmp);
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointStatus {
    Pass,
    Fail,
    PreconditionFailed,
}

/// Outcome of the fixed-point-structure check for an anti-commuting pair.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub status: FixedPointStatus,
    pub relation_sup: f64,
    pub a_fixed: Vec<f64>,
    pub b_fixed: Vec<f64>,
    /// a-fixed points with no b-fixed point within tolerance.
    pub uncontained: Vec<f64>,
    /// complementary arcs of the a-fixed set missing a b-fixed point.
    pub empty_arcs: Vec<(f64, f64)>,
    pub detail: String,
}

/// For circle maps with `a b a⁻¹ = b⁻¹` and both maps having fixed points,
/// checks that every fixed point of `a` is fixed by `b` and that every
/// complementary arc of the fixed set of `a` contains a fixed point of `b`.
pub fn fixed_point_structure_check(a: &CircleMap, b: &CircleMap, grid: usize) -> FixedPointReport {
    // relation precheck on the grid
    let conj = CircleMap::compose_all(vec![a.clone(), b.clone(), a.inverse()]);
    let b_inv = b.inverse();
    let mut relation_sup: f64 = 0.0;
    for k in 0..grid {
        let x = k as f64 / grid as f64;
        relation_sup = relation_sup.max(circle_dist(conj.lift(x), b_inv.lift(x)));
    }
    if relation_sup >= RELATION_TOL {
        return FixedPointReport {
            status: FixedPointStatus::PreconditionFailed,
            relation_sup,
            a_fixed: Vec::new(),
            b_fixed: Vec::new(),
            uncontained: Vec::new(),
            empty_arcs: Vec::new(),
            detail: format!("conjugation relation fails on the grid (sup {relation_sup:.2e})"),
        };
    }

    let a_fixed = fixed_points(a, grid);
    let b_fixed = fixed_points(b, grid);
    if a_fixed.is_empty() || b_fixed.is_empty() {
        return FixedPointReport {
            status: FixedPointStatus::PreconditionFailed,
            relation_sup,
            a_fixed,
            b_fixed,
            uncontained: Vec::new(),
            empty_arcs: Vec::new(),
            detail: "both maps must have fixed points".into(),
        };
    }

    let uncontained: Vec<f64> = a_fixed
        .iter()
        .copied()
        .filter(|&x| b_fixed.iter().all(|&y| circle_dist(x, y) > 1e-5))
        .collect();

    // complementary arcs between consecutive a-fixed points (cyclically)
    let mut empty_arcs = Vec::new();
    let n = a_fixed.len();
    for i in 0..n {
        let lo = a_fixed[i];
        let hi = if i + 1 < n {
            a_fixed[i + 1]
        } else {
            a_fixed[0] + 1.0
        };
        if hi - lo < 2.5 / grid as f64 {
            continue; // not a genuine arc at detection resolution
        }
        let has_b = b_fixed.iter().any(|&y| {
            let y0 = if y < lo { y + 1.0 } else { y };
            lo + 1e-6 < y0 && y0 < hi - 1e-6
        });
        if !has_b {
            empty_arcs.push((lo, hi));
        }
    }

    let pass = uncontained.is_empty() && empty_arcs.is_empty();
    FixedPointReport {
        status: if pass {
            FixedPointStatus::Pass
        } else {
            FixedPointStatus::Fail
        },
        relation_sup,
        detail: if pass {
            format!(
                "{} a-fixed and {} b-fixed points detected",
                a_fixed.len(),
                b_fixed.len()
            )
        } else {
            "fixed-point structure violated".into()
        },
        a_fixed,
        b_fixed,
        uncontained,
        empty_arcs,
    }
}

/// The compactified simplest line action, for the fixed-point checks.
pub fn compactified_line_action() -> (CircleMap, CircleMap) {
    let (a, b) = line_action_generators();
    (CircleMap::one_point(a), CircleMap::one_point(b))
}
