//! The half-integer index of a fixed-point-free map relative to a power of
//! the quarter-turn.
//!
//! For a map `f` and the translation `τ = a^k` of the cover, the index is the
//! total turning of the displacement vector `x ↦ f(x) - x` along a curve
//! joining a point to a distinguished image, divided by `2π`:
//!
//! * even `k`: `τ` commutes with `f`, the curve joins `x` to `τ(x)`, and the
//!   displacement at the two ends is equal, so the turning is a multiple of
//!   `2π` and the index an integer;
//! * odd `k`: `τ` conjugates `f` to its inverse, the curve joins `x` to
//!   `τ(f(x))`, and the displacement at the two ends is exactly opposite, so
//!   the turning is an odd multiple of `π` and the index a strict
//!   half-integer.
//!
//! Either way the value does not depend on the curve or the starting point,
//! which the tests exercise by perturbing both. Curves are polylines refined
//! adaptively until no step turns the displacement by `π/2` or more.

use std::f64::consts::{FRAC_PI_2, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::klein_group::BsElement;

use super::maps::{PlaneMap, PlanePoint};

/// A sampled curve used as a polyline by linear interpolation.
#[derive(Clone, Debug, Serialize)]
pub struct CurveSample {
    pub points: Vec<PlanePoint>,
    /// Largest displacement turn allowed per refined step, radians.
    pub max_turn: f64,
}

impl CurveSample {
    pub fn new(points: Vec<PlanePoint>) -> Result<Self> {
        Self::with_max_turn(points, FRAC_PI_2)
    }

    pub fn with_max_turn(points: Vec<PlanePoint>, max_turn: f64) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidArgument(
                "a curve needs at least two points".into(),
            ));
        }
        if !points.iter().all(PlanePoint::is_finite) {
            return Err(Error::NonFinite);
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "consecutive curve points must be distinct".into(),
            ));
        }
        if !(max_turn > 0.0 && max_turn <= FRAC_PI_2) {
            return Err(Error::InvalidArgument(
                "max_turn must lie in (0, π/2]".into(),
            ));
        }
        Ok(CurveSample { points, max_turn })
    }

    /// CSV rows `theta,r`, one vertex per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,r\n");
        for p in &self.points {
            out.push_str(&format!("{},{}\n", p.theta, p.r));
        }
        out
    }
}

/// A computed index: the value in half-units, and how far the raw winding was
/// from it.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IndexValue {
    /// Twice the index, an exact integer.
    pub half_units: i64,
    /// Distance of the unrounded winding (in index units) to the half-integer.
    pub residual: f64,
}

impl IndexValue {
    pub fn value(&self) -> f64 {
        self.half_units as f64 / 2.0
    }

    /// True when the index is a half-integer that is not an integer.
    pub fn is_strict_half(&self) -> bool {
        self.half_units.rem_euclid(2) != 0
    }
}

fn displacement<M: PlaneMap>(map: &M, x: PlanePoint) -> Result<[f64; 2]> {
    let y = map.apply(x);
    let v = [y.theta - x.theta, y.r - x.r];
    if !(v[0].is_finite() && v[1].is_finite()) {
        return Err(Error::NonFinite);
    }
    if v[0].hypot(v[1]) < 1e-13 {
        return Err(Error::VanishingDisplacement {
            theta: x.theta,
            r: x.r,
        });
    }
    Ok(v)
}

/// Signed angle from `v0` to `v1`, in `(-π, π]`.
fn turn(v0: [f64; 2], v1: [f64; 2]) -> f64 {
    let cross = v0[0] * v1[1] - v0[1] * v1[0];
    let dot = v0[0] * v1[0] + v0[1] * v1[1];
    cross.atan2(dot)
}

const MAX_DEPTH: u32 = 40;
/// Pre-split legs to this step length before adaptive bisection, so a step
/// cannot silently wrap the displacement by a full turn.
const BASE_STEP: f64 = 0.01;

fn leg_winding<M: PlaneMap>(
    map: &M,
    p0: PlanePoint,
    v0: [f64; 2],
    p1: PlanePoint,
    v1: [f64; 2],
    max_turn: f64,
    depth: u32,
) -> Result<f64> {
    let t = turn(v0, v1);
    if t.abs() < max_turn {
        return Ok(t);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::RefinementDepth(MAX_DEPTH));
    }
    let mid = PlanePoint::new((p0.theta + p1.theta) / 2.0, (p0.r + p1.r) / 2.0);
    let vm = displacement(map, mid)?;
    Ok(leg_winding(map, p0, v0, mid, vm, max_turn, depth + 1)?
        + leg_winding(map, mid, vm, p1, v1, max_turn, depth + 1)?)
}

/// Total turning of the displacement of `map` along the polyline, divided by
/// `2π` and rounded to the nearest half-integer. Errors if the raw value is
/// farther than `tol` from a half-integer.
pub fn index_along<M: PlaneMap>(map: &M, curve: &CurveSample, tol: f64) -> Result<IndexValue> {
    let mut total = 0.0;
    for seg in curve.points.windows(2) {
        let (p0, p1) = (seg[0], seg[1]);
        let len = p0.dist(&p1);
        let steps = ((len / BASE_STEP).ceil() as usize).max(1);
        let mut prev = p0;
        let mut v_prev = displacement(map, prev)?;
        for s in 1..=steps {
            let t = s as f64 / steps as f64;
            let next = PlanePoint::new(
                p0.theta + t * (p1.theta - p0.theta),
                p0.r + t * (p1.r - p0.r),
            );
            let v_next = displacement(map, next)?;
            total += leg_winding(map, prev, v_prev, next, v_next, curve.max_turn, 0)?;
            prev = next;
            v_prev = v_next;
        }
    }
    let value = total / TAU;
    let half_units = (2.0 * value).round() as i64;
    let residual = (value - half_units as f64 / 2.0).abs();
    if residual > tol {
        return Err(Error::IndexResidual {
            value,
            residual,
            tol,
        });
    }
    Ok(IndexValue {
        half_units,
        residual,
    })
}

/// Builds the canonical straight curve for `τ = a^k` out of `seed`:
/// to `τ(seed)` when `k` is even, to `τ(map(seed))` when `k` is odd.
pub fn index_curve<M: PlaneMap>(map: &M, tau: BsElement, seed: PlanePoint) -> Result<CurveSample> {
    if tau.q != 0 || tau.p == 0 {
        return Err(Error::InvalidArgument(
            "tau must be a nonzero power of the quarter-turn (q = 0, p ≠ 0)".into(),
        ));
    }
    if !seed.is_finite() {
        return Err(Error::NonFinite);
    }
    let base = if tau.p.rem_euclid(2) == 0 {
        seed
    } else {
        map.apply(seed)
    };
    let end = PlanePoint::new(base.theta + tau.p as f64 * FRAC_PI_2, base.r);
    CurveSample::new(vec![seed, end])
}

/// The index of `map` relative to `τ = a^k`, computed along the canonical
/// curve from `seed`.
pub fn index<M: PlaneMap>(
    map: &M,
    tau: BsElement,
    seed: PlanePoint,
    tol: f64,
) -> Result<IndexValue> {
    let curve = index_curve(map, tau, seed)?;
    index_along(map, &curve, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_model::maps::ModelMap;

    #[test]
    fn model_index_is_minus_half_k() {
        let b = ModelMap::b();
        for k in [-3i64, -2, -1, 1, 2, 3] {
            let v = index(&b, BsElement::new(k, 0), PlanePoint::new(0.2, 0.4), 1e-6).unwrap();
            assert_eq!(v.half_units, -k, "k={k} value={}", v.value());
            assert!(v.residual < 1e-9, "k={k} residual={}", v.residual);
        }
    }

    #[test]
    fn even_powers_double_the_base_index() {
        let b = ModelMap::b();
        let base = index(&b, BsElement::new(1, 0), PlanePoint::new(-0.7, 1.1), 1e-6).unwrap();
        for p in 1i64..=3 {
            let v = index(
                &b,
                BsElement::new(2 * p, 0),
                PlanePoint::new(-0.7, 1.1),
                1e-6,
            )
            .unwrap();
            assert_eq!(v.half_units, 2 * p * base.half_units);
        }
    }

    #[test]
    fn base_index_is_a_strict_half_integer() {
        let b = ModelMap::b();
        let v = index(&b, BsElement::new(1, 0), PlanePoint::new(0.0, 0.0), 1e-6).unwrap();
        assert!(v.is_strict_half());
    }

    #[test]
    fn index_is_seed_and_curve_independent() {
        let b = ModelMap::b();
        let tau = BsElement::new(1, 0);
        let reference = index(&b, tau, PlanePoint::new(0.0, 0.0), 1e-6)
            .unwrap()
            .half_units;
        for seed in [
            PlanePoint::new(0.9, -2.0),
            PlanePoint::new(-3.4, 1.7),
            PlanePoint::new(12.0, 0.3),
        ] {
            let v = index(&b, tau, seed, 1e-6).unwrap();
            assert_eq!(v.half_units, reference, "seed=({}, {})", seed.theta, seed.r);
        }
        // perturbed polyline through a detour waypoint
        let seed = PlanePoint::new(0.3, 0.5);
        let canonical = index_curve(&b, tau, seed).unwrap();
        let end = canonical.points[1];
        let detour = CurveSample::new(vec![
            seed,
            PlanePoint::new(0.8, 2.4),
            PlanePoint::new(1.9, -1.2),
            end,
        ])
        .unwrap();
        let v = index_along(&b, &detour, 1e-6).unwrap();
        assert_eq!(v.half_units, reference);
    }

    #[test]
    fn conjugation_by_turn_commuting_maps_preserves_the_index() {
        // undulation with quarter-turn period and an r-dependent shear
        let conjugators: Vec<Box<dyn Fn(PlanePoint) -> PlanePoint>> = vec![
            Box::new(|p: PlanePoint| PlanePoint::new(p.theta, p.r + 0.3 * (4.0 * p.theta).sin())),
            Box::new(|p: PlanePoint| PlanePoint::new(p.theta + 0.4 * (0.9 * p.r).sin(), p.r)),
        ];
        let inverses: Vec<Box<dyn Fn(PlanePoint) -> PlanePoint>> = vec![
            Box::new(|p: PlanePoint| PlanePoint::new(p.theta, p.r - 0.3 * (4.0 * p.theta).sin())),
            Box::new(|p: PlanePoint| PlanePoint::new(p.theta - 0.4 * (0.9 * p.r).sin(), p.r)),
        ];
        let b = ModelMap::b();
        for (h, h_inv) in conjugators.iter().zip(&inverses) {
            let conj = |x: PlanePoint| h(b.apply(h_inv(x)));
            let v = index(
                &conj,
                BsElement::new(1, 0),
                PlanePoint::new(0.45, -0.2),
                1e-6,
            )
            .unwrap();
            assert_eq!(v.half_units, -1);
        }
    }

    #[test]
    fn tau_must_be_a_turn_power() {
        let b = ModelMap::b();
        assert!(index(&b, BsElement::new(0, 1), PlanePoint::new(0.0, 0.0), 1e-6).is_err());
        assert!(index(&b, BsElement::new(0, 0), PlanePoint::new(0.0, 0.0), 1e-6).is_err());
    }
}
