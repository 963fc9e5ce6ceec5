//! Disk separation checks for the lifted action.
//!
//! [`wandering_check`] verifies, for a disk `D` that the squeeze lift moves
//! off itself, that every image `a^{2p} b^q (D)` with `(p, q) ≠ (0, 0)` stays
//! disjoint from `D`. [`nonwandering_witness`] looks for the opposite
//! phenomenon on the invariant vertical lines: for a disk meeting a line
//! `θ = kπ/2`, some image `b^{±n} a (D)` returns to meet `D` once `n` is
//! large enough.
//!
//! All set statements are sampled: a disk is carried by its center, interior
//! rings, and a boundary polyline at arc spacing `radius/32`, with adaptive
//! top-up wherever the image stretches near the target disk. A verdict inside
//! the safety margin is reported as inconclusive, never as disjoint.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::klein_group::{bs_inverse, BsElement};

use super::maps::{model_apply, PlanePoint};

/// Closed disk in the Euclidean `(θ, r)` metric of the cover.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Disk {
    pub center: PlanePoint,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: PlanePoint, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius <= 0.0 {
            return Err(Error::InvalidArgument(
                "disk radius must be positive".into(),
            ));
        }
        Ok(Disk { center, radius })
    }

    pub fn contains(&self, p: &PlanePoint, slack: f64) -> bool {
        self.center.dist(p) < self.radius + slack
    }

    fn boundary_point(&self, angle: f64) -> PlanePoint {
        PlanePoint::new(
            self.center.theta + self.radius * angle.cos(),
            self.center.r + self.radius * angle.sin(),
        )
    }
}

/// Sampling slack: anything closer than this to the boundary is treated as
/// undecided rather than certified.
pub const SEPARATION_MARGIN: f64 = 1e-6;

/// Verdict of a sampled disjointness test between a disk and one of its
/// images.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Separation {
    Disjoint {
        clearance: f64,
    },
    Intersecting {
        witness_theta: f64,
        witness_r: f64,
        depth: f64,
    },
    Inconclusive {
        clearance: f64,
    },
}

impl Separation {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, Separation::Disjoint { .. })
    }

    pub fn is_intersecting(&self) -> bool {
        matches!(self, Separation::Intersecting { .. })
    }
}

pub(crate) fn disk_samples(d: &Disk) -> Vec<PlanePoint> {
    let mut pts = vec![d.center];
    // interior rings
    for frac in [0.25, 0.5, 0.75] {
        let rad = d.radius * frac;
        for k in 0..24 {
            let ang = k as f64 / 24.0 * std::f64::consts::TAU;
            pts.push(PlanePoint::new(
                d.center.theta + rad * ang.cos(),
                d.center.r + rad * ang.sin(),
            ));
        }
    }
    // boundary at arc spacing ≤ radius/32, i.e. a fixed 64π ≈ 202 subdivisions
    let n = (std::f64::consts::TAU * 32.0).ceil() as usize;
    for k in 0..n {
        pts.push(d.boundary_point(k as f64 / n as f64 * std::f64::consts::TAU));
    }
    pts
}

/// Smallest sampled distance from `g`-images of `d` to the center of
/// `target`, refining boundary arcs whose images stretch near the target.
fn min_image_distance(d: &Disk, g: BsElement, target: &Disk) -> (f64, PlanePoint, PlanePoint) {
    let map = |x: PlanePoint| model_apply(g, x).expect("element within supported range");
    let mut best = (f64::INFINITY, d.center, map(d.center));
    let mut consider = |src: PlanePoint, img: PlanePoint| {
        let dist = img.dist(&target.center);
        if dist < best.0 {
            best = (dist, src, img);
        }
    };
    for src in disk_samples(d) {
        consider(src, map(src));
    }
    // adaptive boundary top-up
    let n = 256;
    let mut stack: Vec<(f64, f64, PlanePoint, PlanePoint, u32)> = Vec::new();
    for k in 0..n {
        let a0 = k as f64 / n as f64 * std::f64::consts::TAU;
        let a1 = (k + 1) as f64 / n as f64 * std::f64::consts::TAU;
        stack.push((
            a0,
            a1,
            map(d.boundary_point(a0)),
            map(d.boundary_point(a1)),
            0,
        ));
    }
    while let Some((a0, a1, i0, i1, depth)) = stack.pop() {
        let gap = i0.dist(&i1);
        let near = i0.dist(&target.center).min(i1.dist(&target.center));
        if depth >= 18 || gap <= target.radius / 8.0 || near > gap + 2.0 * target.radius {
            continue;
        }
        let mid = (a0 + a1) / 2.0;
        let src = d.boundary_point(mid);
        let img = map(src);
        consider(src, img);
        stack.push((a0, mid, i0, img, depth + 1));
        stack.push((mid, a1, img, i1, depth + 1));
    }
    best
}

/// Sampled disjointness verdict for `d ∩ g(d)`, probing both `g` and `g⁻¹`.
pub fn separation(d: &Disk, g: BsElement) -> Separation {
    let fwd = min_image_distance(d, g, d);
    let bwd = min_image_distance(d, bs_inverse(g), d);
    let (dist, src, _img) = if fwd.0 <= bwd.0 { fwd } else { bwd };
    if dist < d.radius - SEPARATION_MARGIN {
        Separation::Intersecting {
            witness_theta: src.theta,
            witness_r: src.r,
            depth: d.radius - dist,
        }
    } else if dist > d.radius + SEPARATION_MARGIN {
        Separation::Disjoint {
            clearance: dist - d.radius,
        }
    } else {
        Separation::Inconclusive {
            clearance: dist - d.radius,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WanderingCase {
    pub p: i64,
    pub q: i64,
    pub separation: Separation,
}

#[derive(Clone, Debug, Serialize)]
pub struct WanderingReport {
    pub disk: Disk,
    pub p_range: i64,
    pub q_range: i64,
    pub margin: f64,
    /// Whether the disk cleared the `b(D) ∩ D = ∅` precondition.
    pub precondition_ok: bool,
    pub precondition: Separation,
    pub cases: Vec<WanderingCase>,
    pub pass: bool,
}

/// Checks `D ∩ a^{2p} b^q(D) = ∅` over the given exponent box, provided the
/// disk is moved off itself by the squeeze lift. A disk failing that
/// precondition yields a report, not an error.
pub fn wandering_check(d: &Disk, p_range: i64, q_range: i64) -> WanderingReport {
    let precondition = separation(d, BsElement::new(0, 1));
    let precondition_ok = precondition.is_disjoint();
    let mut cases = Vec::new();
    let mut pass = precondition_ok;
    if precondition_ok {
        for p in -p_range..=p_range {
            for q in -q_range..=q_range {
                if p == 0 && q == 0 {
                    continue;
                }
                let sep = separation(d, BsElement::new(2 * p, q));
                pass &= sep.is_disjoint();
                cases.push(WanderingCase {
                    p,
                    q,
                    separation: sep,
                });
            }
        }
    }
    WanderingReport {
        disk: *d,
        p_range,
        q_range,
        margin: SEPARATION_MARGIN,
        precondition_ok,
        precondition,
        cases,
        pass,
    }
}

/// Search outcome for the returning images `b^{±n} a (D)`.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonwanderingOutcome {
    Found {
        n: u32,
        sign: i8,
        source_theta: f64,
        source_r: f64,
        image_theta: f64,
        image_r: f64,
    },
    NotFound,
}

impl NonwanderingOutcome {
    pub fn found(&self) -> Option<u32> {
        match self {
            NonwanderingOutcome::Found { n, .. } => Some(*n),
            NonwanderingOutcome::NotFound => None,
        }
    }
}

/// Looks for the smallest `1 ≤ n ≤ n_max` with `b^{±n} a (D) ∩ D ≠ ∅`.
///
/// Expected to succeed when the disk meets one of the invariant lines
/// `θ = kπ/2`; away from the lines the search simply reports the outcome.
/// Besides plain dense sampling, horizontal chords through the disk are
/// probed by bisection on the image height, which localizes the
/// exponentially thin slab of the disk whose image dives back.
pub fn nonwandering_witness(d: &Disk, n_max: u32) -> NonwanderingOutcome {
    let base = disk_samples(d);
    for n in 1..=n_max {
        for sign in [1i8, -1] {
            // b^{sign·n} a = a b^{-sign·n} has normal form (1, -sign·n)
            let g = BsElement::new(1, -(sign as i64) * n as i64);
            let map = |x: PlanePoint| model_apply(g, x).expect("supported range");
            let hit = |src: PlanePoint, img: PlanePoint| -> Option<NonwanderingOutcome> {
                (d.center.dist(&img) < d.radius - SEPARATION_MARGIN).then_some(
                    NonwanderingOutcome::Found {
                        n,
                        sign,
                        source_theta: src.theta,
                        source_r: src.r,
                        image_theta: img.theta,
                        image_r: img.r,
                    },
                )
            };
            for &src in &base {
                if let Some(found) = hit(src, map(src)) {
                    return found;
                }
            }
            // chord bisection on the image height
            for r_frac in [0.0, 0.5, -0.5] {
                let r = d.center.r + r_frac * d.radius;
                let half = (d.radius * d.radius - (r - d.center.r).powi(2)).sqrt() * 0.999;
                let grid = 256;
                let h = |s: f64| map(PlanePoint::new(d.center.theta + s, r)).r - d.center.r;
                let mut prev_s = -half;
                let mut prev_h = h(prev_s);
                for k in 1..=grid {
                    let s = -half + 2.0 * half * k as f64 / grid as f64;
                    let cur = h(s);
                    if prev_h.signum() != cur.signum() {
                        let (mut lo, mut hi) = (prev_s, s);
                        for _ in 0..200 {
                            let mid = 0.5 * (lo + hi);
                            if h(mid).signum() == h(lo).signum() {
                                lo = mid;
                            } else {
                                hi = mid;
                            }
                        }
                        let src = PlanePoint::new(d.center.theta + 0.5 * (lo + hi), r);
                        if let Some(found) = hit(src, map(src)) {
                            return found;
                        }
                    }
                    prev_s = s;
                    prev_h = cur;
                }
            }
        }
    }
    NonwanderingOutcome::NotFound
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn free_disk_wanders_under_the_even_subgroup() {
        let d = Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.1).unwrap();
        let report = wandering_check(&d, 5, 5);
        assert!(report.precondition_ok);
        assert!(
            report.pass,
            "{:?}",
            report.cases.iter().find(|c| !c.separation.is_disjoint())
        );
    }

    #[test]
    fn the_identity_case_is_excluded_by_contract() {
        let d = Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.1).unwrap();
        // (p, q) = (0, 0) would trivially intersect itself
        assert!(separation(&d, BsElement::IDENTITY).is_intersecting());
    }

    #[test]
    fn oversized_disk_on_an_invariant_line_fails_the_precondition_check() {
        // The squeeze lift slides the line θ = 0 down by ln 2 ≈ 0.693. A
        // radius-0.4 disk centered on the line overlaps its image along the
        // line, so it is not free and the check refuses to proceed.
        let d = Disk::new(PlanePoint::new(0.0, 0.0), 0.4).unwrap();
        let report = wandering_check(&d, 2, 2);
        assert!(!report.precondition_ok);
        assert!(!report.pass);
    }

    #[test]
    fn small_disk_on_an_invariant_line_is_still_free() {
        // Radius 0.2 is well under half the ln 2 slide, so evaluating the
        // squeeze on the disk shows it clear of itself and the box check
        // goes through.
        let d = Disk::new(PlanePoint::new(0.0, 0.0), 0.2).unwrap();
        let report = wandering_check(&d, 2, 2);
        assert!(report.precondition_ok);
        assert!(report.pass);
    }

    #[test]
    fn line_meeting_disk_has_a_returning_image() {
        let d = Disk::new(PlanePoint::new(FRAC_PI_2, 0.0), 0.3).unwrap();
        let outcome = nonwandering_witness(&d, 50);
        assert!(outcome.found().is_some(), "no witness found");
    }

    #[test]
    fn disk_off_the_lines_reports_not_found() {
        let d = Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.05).unwrap();
        assert!(nonwandering_witness(&d, 20).found().is_none());
    }

    #[test]
    fn zero_budget_reports_not_found() {
        let d = Disk::new(PlanePoint::new(FRAC_PI_2, 0.0), 0.3).unwrap();
        assert!(nonwandering_witness(&d, 0).found().is_none());
    }
}
