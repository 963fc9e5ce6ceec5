//! Bounded-iteration estimation of forward limit sets.
//!
//! For a compact set `k` that a map moves off itself, the forward images
//! `f^n(k)` are pairwise disjoint and their accumulation in the plane is the
//! forward limit set. The estimator iterates a dense sample of `k` through
//! the window `n ∈ [n_max/2, n_max]`, quantizes the images to a grid, and
//! keeps the cells that recur: a cell counts as limit-like only when images
//! of at least two distinct iterates land in it (for windows of three or more
//! iterates; tiny windows keep the plain union). Cells touched by the early
//! images `n ≤ n_max/4` are removed, so the output is disjoint from the set
//! and its first iterates by construction.
//!
//! Recurrence is what separates escape from accumulation at this truncation:
//! a translation marches every cell through exactly once and estimates to the
//! empty cloud, while images piling onto the invariant vertical lines revisit
//! their cells at every late iterate. The thin slabs of the set responsible
//! for such filaments contract exponentially, so the sampler supplements the
//! dense grid with geometric ladders of points accumulating on each invariant
//! line the set crosses.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::klein_group::bs_pow;

use super::index::CurveSample;
use super::maps::{model_apply, ModelMap, PlaneMap, PlanePoint};
use super::wandering::{disk_samples, Disk, SEPARATION_MARGIN};

/// A compact source set for the estimator.
#[derive(Clone, Debug)]
pub enum CompactSet {
    Disk(Disk),
    Curve(CurveSample),
}

impl CompactSet {
    fn theta_interval(&self) -> (f64, f64) {
        match self {
            CompactSet::Disk(d) => (d.center.theta - d.radius, d.center.theta + d.radius),
            CompactSet::Curve(c) => {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for p in &c.points {
                    lo = lo.min(p.theta);
                    hi = hi.max(p.theta);
                }
                (lo, hi)
            }
        }
    }

    /// Distance from a point to the set.
    fn distance(&self, p: &PlanePoint) -> f64 {
        match self {
            CompactSet::Disk(d) => (d.center.dist(p) - d.radius).max(0.0),
            CompactSet::Curve(c) => c
                .points
                .windows(2)
                .map(|seg| point_segment_distance(p, &seg[0], &seg[1]))
                .fold(f64::INFINITY, f64::min),
        }
    }
}

fn point_segment_distance(p: &PlanePoint, a: &PlanePoint, b: &PlanePoint) -> f64 {
    let (dx, dy) = (b.theta - a.theta, b.r - a.r);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.theta - a.theta) * dx + (p.r - a.r) * dy) / len2).clamp(0.0, 1.0)
    };
    p.dist(&PlanePoint::new(a.theta + t * dx, a.r + t * dy))
}

/// Grid-quantized point cloud, exported as cell centers.
#[derive(Clone, Debug, Serialize)]
pub struct PointCloud {
    pub grid: f64,
    pub cells: BTreeSet<(i64, i64)>,
}

impl PointCloud {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn points(&self) -> Vec<PlanePoint> {
        self.cells
            .iter()
            .map(|&(i, j)| {
                PlanePoint::new((i as f64 + 0.5) * self.grid, (j as f64 + 0.5) * self.grid)
            })
            .collect()
    }

    /// CSV rows `theta,r`, one cell center per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,r\n");
        for p in self.points() {
            out.push_str(&format!("{},{}\n", p.theta, p.r));
        }
        out
    }

    pub fn cell_of(grid: f64, p: &PlanePoint) -> (i64, i64) {
        ((p.theta / grid).floor() as i64, (p.r / grid).floor() as i64)
    }
}

fn base_samples(set: &CompactSet, grid: f64) -> Vec<PlanePoint> {
    match set {
        CompactSet::Disk(d) => {
            let mut pts = disk_samples(d);
            // interior lattice at half the quantization scale
            let step = (grid / 2.0).min(d.radius / 4.0);
            let n = (d.radius / step).ceil() as i64;
            for i in -n..=n {
                for j in -n..=n {
                    let p = PlanePoint::new(
                        d.center.theta + i as f64 * step,
                        d.center.r + j as f64 * step,
                    );
                    if d.center.dist(&p) <= d.radius {
                        pts.push(p);
                    }
                }
            }
            pts
        }
        CompactSet::Curve(c) => {
            let mut pts = Vec::new();
            for seg in c.points.windows(2) {
                let len = seg[0].dist(&seg[1]);
                let steps = ((len / (grid / 2.0)).ceil() as usize).max(1);
                for s in 0..=steps {
                    let t = s as f64 / steps as f64;
                    pts.push(PlanePoint::new(
                        seg[0].theta + t * (seg[1].theta - seg[0].theta),
                        seg[0].r + t * (seg[1].r - seg[0].r),
                    ));
                }
            }
            pts
        }
    }
}

/// Points of the set accumulating geometrically on each invariant line it
/// crosses. The ratio is tuned so consecutive ladder points land within one
/// grid cell of each other after any number of iterates up to `n_max`.
fn line_ladders(set: &CompactSet, grid: f64, n_max: u32) -> Vec<PlanePoint> {
    let (lo, hi) = set.theta_interval();
    let mut pts = Vec::new();
    let k_lo = (lo / FRAC_PI_2).floor() as i64;
    let k_hi = (hi / FRAC_PI_2).ceil() as i64;
    let ratio = (-(grid / 2.0)).exp();
    let delta_min = 0.25f64.powi(n_max as i32 + 4).max(1e-300);
    for k in k_lo..=k_hi {
        let line = k as f64 * FRAC_PI_2;
        if line < lo - grid || line > hi + grid {
            continue;
        }
        match set {
            CompactSet::Disk(d) => {
                if (line - d.center.theta).abs() > d.radius {
                    continue;
                }
                let rows = ((4.0 * d.radius / grid).ceil() as i64).clamp(1, 128);
                for row in 0..=rows {
                    let r = d.center.r - d.radius + 2.0 * d.radius * row as f64 / rows as f64;
                    let half = d.radius * d.radius - (r - d.center.r).powi(2);
                    if half <= 0.0 {
                        continue;
                    }
                    let half = half.sqrt();
                    let mut delta = 2.0 * d.radius;
                    while delta > delta_min {
                        for side in [1.0, -1.0] {
                            let p = PlanePoint::new(line + side * delta, r);
                            if (p.theta - d.center.theta).abs() <= half {
                                pts.push(p);
                            }
                        }
                        delta *= ratio;
                    }
                    pts.push(PlanePoint::new(line, r));
                }
            }
            CompactSet::Curve(c) => {
                for seg in c.points.windows(2) {
                    let (t0, t1) = (seg[0].theta - line, seg[1].theta - line);
                    if t0.signum() == t1.signum() && t0 != 0.0 && t1 != 0.0 {
                        continue;
                    }
                    // crossing parameter
                    let tc = if (t1 - t0).abs() < f64::EPSILON {
                        0.5
                    } else {
                        (-t0 / (t1 - t0)).clamp(0.0, 1.0)
                    };
                    let at = |t: f64| {
                        PlanePoint::new(
                            seg[0].theta + t * (seg[1].theta - seg[0].theta),
                            seg[0].r + t * (seg[1].r - seg[0].r),
                        )
                    };
                    pts.push(at(tc));
                    let mut offset = 1.0f64;
                    while offset > delta_min {
                        for t in [tc - offset, tc + offset] {
                            if (0.0..=1.0).contains(&t) {
                                pts.push(at(t));
                            }
                        }
                        offset *= ratio;
                    }
                }
            }
        }
    }
    pts
}

/// Estimates the forward limit set of `set` under `map` at the given grid,
/// iterating to `n_max`. Errors unless the map moves the sampled set clear of
/// itself by the safety margin.
pub fn limit_set_estimate(
    set: &CompactSet,
    map: &ModelMap,
    n_max: u32,
    grid: f64,
) -> Result<PointCloud> {
    if grid <= 0.0 || !grid.is_finite() || n_max == 0 {
        return Err(Error::InvalidArgument(
            "limit_set_estimate needs a positive grid and n_max ≥ 1".into(),
        ));
    }
    let mut samples = base_samples(set, grid);
    samples.extend(line_ladders(set, grid, n_max));

    // free-set precondition, sampled with margin
    let mut clearance = f64::INFINITY;
    for s in &samples {
        clearance = clearance.min(set.distance(&map.apply(*s)));
    }
    if clearance <= SEPARATION_MARGIN {
        return Err(Error::NotFree(format!(
            "sampled image clearance {clearance:.3e} is within the margin"
        )));
    }

    let n_stable = (n_max / 2).max(1);
    let window_iterates = n_max - n_stable + 1;
    let needed_hits: u8 = if window_iterates >= 3 { 2 } else { 1 };

    let mut hits: HashMap<(i64, i64), (u32, u8)> = HashMap::new();
    let mut early: BTreeSet<(i64, i64)> = BTreeSet::new();
    for n in 0..=n_max {
        let g = bs_pow(map.element(), n as i64)?;
        let late = n >= n_stable;
        let is_early = n <= n_stable / 2;
        if !late && !is_early {
            continue;
        }
        for s in &samples {
            let img = model_apply(g, *s)?;
            let cell = PointCloud::cell_of(grid, &img);
            if is_early {
                early.insert(cell);
            }
            if late {
                let entry = hits.entry(cell).or_insert((n, 0));
                if entry.1 == 0 || entry.0 != n {
                    *entry = (n, entry.1.saturating_add(1));
                }
            }
        }
    }

    // Images accumulate onto the invariant lines faster than any fixed grid
    // resolves, so quantized early images can abut limit cells; subtracting a
    // one-cell dilation keeps the output clear of anything the true early
    // images might touch between samples.
    let mut excluded = BTreeSet::new();
    for &(i, j) in &early {
        for di in -1..=1 {
            for dj in -1..=1 {
                excluded.insert((i + di, j + dj));
            }
        }
    }
    let cells = hits
        .into_iter()
        .filter(|&(cell, (_, count))| count >= needed_hits && !excluded.contains(&cell))
        .map(|(cell, _)| cell)
        .collect();
    Ok(PointCloud { grid, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::klein_group::BsElement;
    use std::f64::consts::PI;

    fn disk(theta: f64, r: f64, radius: f64) -> CompactSet {
        CompactSet::Disk(Disk::new(PlanePoint::new(theta, r), radius).unwrap())
    }

    #[test]
    fn translation_estimates_to_the_empty_cloud() {
        let cloud =
            limit_set_estimate(&disk(FRAC_PI_2 / 2.0, 0.0, 0.1), &ModelMap::a(), 24, 0.01).unwrap();
        assert!(cloud.is_empty(), "{} cells", cloud.len());
    }

    #[test]
    fn strip_interior_disk_escapes_under_the_squeeze() {
        // Every orbit of the open strip 0 < θ < π/2 leaves all compact sets,
        // so nothing recurs at this truncation either.
        let cloud =
            limit_set_estimate(&disk(FRAC_PI_2 / 2.0, 0.0, 0.1), &ModelMap::b(), 24, 0.01).unwrap();
        assert!(cloud.is_empty(), "{} cells", cloud.len());
    }

    #[test]
    fn disk_across_a_repelling_line_accumulates_on_the_neighbour_lines() {
        let source = disk(FRAC_PI_2, 0.0, 0.1);
        let cloud = limit_set_estimate(&source, &ModelMap::b(), 24, 0.01).unwrap();
        assert!(!cloud.is_empty());
        for p in cloud.points() {
            let nearest = (p.theta / FRAC_PI_2).round();
            // the filaments hug the even (attracting) lines θ = 0, π
            assert!(
                (p.theta - nearest * FRAC_PI_2).abs() < 0.15,
                "cell at ({}, {}) is off the lines",
                p.theta,
                p.r
            );
            assert!(nearest.rem_euclid(2.0) < 0.5, "odd line at {}", p.theta);
        }
        // output stays clear of the source and its first iterates
        let d = Disk::new(PlanePoint::new(FRAC_PI_2, 0.0), 0.1).unwrap();
        for n in 0..=3i64 {
            let g = bs_pow(BsElement::new(0, 1), n).unwrap();
            for s in disk_samples(&d) {
                let img = model_apply(g, s).unwrap();
                let cell = PointCloud::cell_of(0.01, &img);
                assert!(!cloud.cells.contains(&cell), "iterate {n} cell {cell:?}");
            }
        }
    }

    #[test]
    fn tiny_windows_keep_the_plain_union() {
        let source = disk(PI / 4.0, 0.0, 0.05);
        let cloud = limit_set_estimate(&source, &ModelMap::b(), 2, 0.01).unwrap();
        // n_stable = 1, window = {1, 2}: the quantized union of those images
        let mut expected = BTreeSet::new();
        let mut samples = base_samples(&source, 0.01);
        samples.extend(line_ladders(&source, 0.01, 2));
        let mut early: BTreeSet<(i64, i64)> = BTreeSet::new();
        for s in &samples {
            let (i, j) = PointCloud::cell_of(0.01, s);
            for di in -1..=1 {
                for dj in -1..=1 {
                    early.insert((i + di, j + dj));
                }
            }
        }
        for n in 1..=2i64 {
            let g = bs_pow(BsElement::new(0, 1), n).unwrap();
            for s in &samples {
                let cell = PointCloud::cell_of(0.01, &model_apply(g, *s).unwrap());
                if !early.contains(&cell) {
                    expected.insert(cell);
                }
            }
        }
        assert_eq!(cloud.cells, expected);
    }

    #[test]
    fn unfree_set_is_rejected() {
        let err = limit_set_estimate(&disk(0.0, 0.0, 0.5), &ModelMap::b(), 10, 0.01);
        assert!(matches!(err, Err(Error::NotFree(_))));
    }
}
