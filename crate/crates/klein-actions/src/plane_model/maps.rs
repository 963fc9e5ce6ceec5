//! The explicit lifted action on the universal cover of the punctured plane.
//!
//! Coordinates are `(θ, r)` with covering projection `(θ, r) ↦ e^{-r+iθ}`.
//! The generator `a` lifts the quarter-turn rotation and acts by
//! `(θ, r) ↦ (θ + π/2, r)`. The generator `b` lifts the diagonal squeeze
//! `(x, y) ↦ (2x, y/2)`; its `q`-th power has the closed form
//!
//! ```text
//! θ' = kπ/2 + atan(4^{∓q} tan(θ - kπ/2)),  k = round(θ / (π/2)),
//!      slope 4^{-q} on even branches, 4^{q} on odd branches;
//! r' = r - ½ ln(4^q cos²θ + 4^{-q} sin²θ),
//! ```
//!
//! the unique lift continuous in `θ`, fixing every multiple of `π/2` in angle
//! and satisfying `b(0, r) = (0, r - ln 2)`. A general element `a^p b^q` acts
//! as the `b`-power followed by the `a`-power. The lifted maps commute with
//! the deck translation `(θ, r) ↦ (θ + 2π, r)` and satisfy `a b a⁻¹ = b⁻¹`
//! exactly; [`verify_relation`] measures both numerically, together with the
//! pointwise freeness of small powers.

use std::f64::consts::FRAC_PI_2;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klein_group::{bs_inverse, BsElement};

/// A point of the cover in `(θ, r)` coordinates.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct PlanePoint {
    pub theta: f64,
    pub r: f64,
}

impl PlanePoint {
    pub fn new(theta: f64, r: f64) -> Self {
        PlanePoint { theta, r }
    }

    pub fn is_finite(&self) -> bool {
        self.theta.is_finite() && self.r.is_finite()
    }

    /// Covering projection `e^{-r}(cos θ, sin θ)`.
    pub fn project(&self) -> [f64; 2] {
        let m = (-self.r).exp();
        [m * self.theta.cos(), m * self.theta.sin()]
    }

    pub fn dist(&self, other: &PlanePoint) -> f64 {
        (self.theta - other.theta).hypot(self.r - other.r)
    }
}

/// Largest `|q|` the closed-form squeeze power supports before 4^q leaves
/// f64 range.
pub const MAX_B_POWER: i64 = 500;

fn pow4(e: i64) -> f64 {
    f64::exp2((2 * e) as f64)
}

/// Closed form for the q-th power of the squeeze lift. Callers guarantee
/// `|q| ≤ MAX_B_POWER` and a finite input.
fn b_power(x: PlanePoint, q: i64) -> PlanePoint {
    if q == 0 {
        return x;
    }
    let k = (x.theta / FRAC_PI_2).round();
    let u = x.theta - k * FRAC_PI_2;
    let even_branch = k.rem_euclid(2.0) < 0.5;
    let slope = pow4(if even_branch { -q } else { q });
    let theta = k * FRAC_PI_2 + (slope * u.tan()).atan();
    let (s, c) = x.theta.sin_cos();
    let z = pow4(q) * c * c + pow4(-q) * s * s;
    PlanePoint {
        theta,
        r: x.r - 0.5 * z.ln(),
    }
}

/// Applies the element `a^p b^q` (squeeze power first, then quarter-turns).
pub fn model_apply(g: BsElement, x: PlanePoint) -> Result<PlanePoint> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    if g.q.abs() > MAX_B_POWER {
        return Err(Error::Overflow("squeeze power out of f64 range"));
    }
    let y = b_power(x, g.q);
    Ok(PlanePoint {
        theta: y.theta + g.p as f64 * FRAC_PI_2,
        r: y.r,
    })
}

/// The linear action downstairs: the matrix `A^p B^q` applied to a plane
/// vector, with `A` the quarter-turn and `B = diag(2, 1/2)`. Used to check
/// that the lift really projects onto the matrix action.
pub fn matrix_action(g: BsElement, v: [f64; 2]) -> [f64; 2] {
    let w = [pow4(g.q).sqrt() * v[0], pow4(-g.q).sqrt() * v[1]];
    match g.p.rem_euclid(4) {
        0 => w,
        1 => [-w[1], w[0]],
        2 => [-w[0], -w[1]],
        _ => [w[1], -w[0]],
    }
}

/// A lifted map tagged with the element it realizes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModelMap {
    element: BsElement,
}

impl ModelMap {
    pub fn new(element: BsElement) -> Self {
        ModelMap { element }
    }

    /// The quarter-turn lift.
    pub fn a() -> Self {
        ModelMap::new(BsElement::new(1, 0))
    }

    /// The squeeze lift.
    pub fn b() -> Self {
        ModelMap::new(BsElement::new(0, 1))
    }

    pub fn element(&self) -> BsElement {
        self.element
    }

    pub fn inverse(&self) -> Self {
        ModelMap::new(bs_inverse(self.element))
    }
}

/// A self-map of the `(θ, r)` plane. Closures qualify, so conjugated and
/// composed maps can be built inline.
pub trait PlaneMap {
    fn apply(&self, p: PlanePoint) -> PlanePoint;
}

impl PlaneMap for ModelMap {
    fn apply(&self, p: PlanePoint) -> PlanePoint {
        model_apply(self.element, p).expect("model map applied out of supported range")
    }
}

impl<F: Fn(PlanePoint) -> PlanePoint> PlaneMap for F {
    fn apply(&self, p: PlanePoint) -> PlanePoint {
        self(p)
    }
}

/// Pointwise displacement floor asserted for nontrivial small powers.
pub const FREENESS_DISPLACEMENT_FLOOR: f64 = 1e-3;

#[derive(Clone, Debug, Serialize)]
pub struct FreenessRow {
    pub p: i64,
    pub q: i64,
    pub min_displacement: f64,
}

/// Outcome of the relation and freeness sampling.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub samples: usize,
    pub tol: f64,
    pub sup_relation_error: f64,
    pub relation_pass: bool,
    pub displacement_floor: f64,
    pub min_displacement: f64,
    pub freeness_pass: bool,
    pub worst_element: FreenessRow,
    pub freeness: Vec<FreenessRow>,
    pub pass: bool,
}

/// Samples `a b a⁻¹` against `b⁻¹` as composed lifted maps and measures, for
/// every nontrivial `a^p b^q` with `|p| + |q| ≤ 6`, the smallest displacement
/// over the same sample set.
pub fn verify_relation<R: Rng>(samples: usize, tol: f64, rng: &mut R) -> RelationReport {
    let pts: Vec<PlanePoint> = (0..samples)
        .map(|_| {
            PlanePoint::new(
                rng.gen_range(-2.0 * std::f64::consts::PI..2.0 * std::f64::consts::PI),
                rng.gen_range(-3.0..3.0),
            )
        })
        .collect();

    let a = BsElement::new(1, 0);
    let a_inv = BsElement::new(-1, 0);
    let b = BsElement::new(0, 1);
    let b_inv = BsElement::new(0, -1);
    let mut sup_relation_error: f64 = 0.0;
    for &x in &pts {
        let lhs = model_apply(a, model_apply(b, model_apply(a_inv, x).unwrap()).unwrap()).unwrap();
        let rhs = model_apply(b_inv, x).unwrap();
        sup_relation_error = sup_relation_error.max(lhs.dist(&rhs));
    }

    let mut freeness = Vec::new();
    for p in -6i64..=6 {
        for q in -6i64..=6 {
            if p == 0 && q == 0 || p.abs() + q.abs() > 6 {
                continue;
            }
            let g = BsElement::new(p, q);
            let mut min_disp = f64::INFINITY;
            for &x in &pts {
                min_disp = min_disp.min(model_apply(g, x).unwrap().dist(&x));
            }
            freeness.push(FreenessRow {
                p,
                q,
                min_displacement: min_disp,
            });
        }
    }
    let worst = freeness
        .iter()
        .min_by(|u, v| u.min_displacement.total_cmp(&v.min_displacement))
        .expect("nonempty")
        .clone();
    let relation_pass = sup_relation_error < tol;
    let freeness_pass = worst.min_displacement > FREENESS_DISPLACEMENT_FLOOR;
    RelationReport {
        samples,
        tol,
        sup_relation_error,
        relation_pass,
        displacement_floor: FREENESS_DISPLACEMENT_FLOOR,
        min_displacement: worst.min_displacement,
        freeness_pass,
        worst_element: worst,
        freeness,
        pass: relation_pass && freeness_pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn apply(p: i64, q: i64, theta: f64, r: f64) -> PlanePoint {
        model_apply(BsElement::new(p, q), PlanePoint::new(theta, r)).unwrap()
    }

    #[test]
    fn quarter_turn() {
        let y = apply(1, 0, 0.0, 5.0);
        assert!((y.theta - FRAC_PI_2).abs() < 1e-15 && (y.r - 5.0).abs() < 1e-15);
    }

    #[test]
    fn squeeze_on_the_invariant_line() {
        let y = apply(0, 1, 0.0, 2.0);
        assert!((y.theta).abs() < 1e-15);
        assert!((y.r - (2.0 - std::f64::consts::LN_2)).abs() < 1e-15);
        // odd line: pushed the other way
        let z = apply(0, 1, FRAC_PI_2, 0.0);
        assert!((z.theta - FRAC_PI_2).abs() < 1e-15);
        assert!((z.r - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn four_quarter_turns_are_the_deck_translation() {
        for theta in [-1.0, 0.3, 2.0] {
            for r in [-2.0, 0.0, 1.5] {
                let y = apply(4, 0, theta, r);
                assert!((y.theta - (theta + 2.0 * PI)).abs() < 1e-12);
                assert!((y.r - r).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn deck_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let x = PlanePoint::new(rng.gen_range(-6.0..6.0), rng.gen_range(-3.0..3.0));
            let p = rng.gen_range(-4i64..=4);
            let q = rng.gen_range(-4i64..=4);
            let g = BsElement::new(p, q);
            let shifted = PlanePoint::new(x.theta + 2.0 * PI, x.r);
            let lhs = model_apply(g, shifted).unwrap();
            let rhs = model_apply(g, x).unwrap();
            assert!(
                (lhs.theta - (rhs.theta + 2.0 * PI)).abs() < 1e-9 && (lhs.r - rhs.r).abs() < 1e-9,
                "g=({p},{q}) x=({}, {})",
                x.theta,
                x.r
            );
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        use crate::klein_group::bs_multiply;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let x = PlanePoint::new(rng.gen_range(-6.0..6.0), rng.gen_range(-3.0..3.0));
            let g = BsElement::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let h = BsElement::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let gh = bs_multiply(g, h).unwrap();
            let lhs = model_apply(gh, x).unwrap();
            let rhs = model_apply(g, model_apply(h, x).unwrap()).unwrap();
            assert!(lhs.dist(&rhs) < 1e-8, "g={g} h={h}");
        }
    }

    #[test]
    fn lift_projects_onto_the_matrix_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let x = PlanePoint::new(rng.gen_range(-6.0..6.0), rng.gen_range(-2.0..2.0));
            let g = BsElement::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let lifted = model_apply(g, x).unwrap().project();
            let downstairs = matrix_action(g, x.project());
            assert!(
                (lifted[0] - downstairs[0]).abs() < 1e-9
                    && (lifted[1] - downstairs[1]).abs() < 1e-9,
                "g={g}"
            );
        }
    }

    #[test]
    fn relation_and_freeness_report() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let report = verify_relation(1000, 1e-9, &mut rng);
        assert!(report.pass, "sup={}", report.sup_relation_error);
        // identity displaces nothing; a² shifts by π
        let x = PlanePoint::new(0.0, 0.0);
        assert_eq!(model_apply(BsElement::IDENTITY, x).unwrap(), x);
        let y = model_apply(BsElement::new(2, 0), x).unwrap();
        assert!((y.dist(&x) - PI).abs() < 1e-15);
    }

    #[test]
    fn non_finite_input_is_an_error() {
        assert!(matches!(
            model_apply(BsElement::new(0, 1), PlanePoint::new(f64::NAN, 0.0)),
            Err(Error::NonFinite)
        ));
    }
}
