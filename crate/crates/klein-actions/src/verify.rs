//! The numbered verification suite.
//!
//! Each criterion is a self-contained check with its tolerances pinned in
//! code; [`run_all`] executes all twelve deterministically from a seed. The
//! `acceptance` integration test asserts every criterion and the CLI exposes
//! the same suite as `verify all`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::derived_groups::{g1_element_order, ElementOrder};
use crate::derived_groups::{
    g1_generator, g2_compare, g2_multiply, g2_rewrite, G1Generator, G2Element, G2Order,
};
use crate::free_words::{reduced_words_up_to, Alphabet, ReducedWord};
use crate::klein_group::{bs_multiply, bs_reduce, BsElement};
use crate::line_circle::{
    circle_dist, compactified_line_action, fixed_point_structure_check, g1_circle_generators,
    rotation_number, CircleMap, FixedPointStatus,
};
use crate::plane_model::{
    index, limit_set_estimate, model_apply, nonwandering_witness, verify_relation, wandering_check,
    CompactSet, Disk, ModelMap, PlaneMap, PlanePoint, PointCloud,
};

pub const CRITERIA_COUNT: u32 = 12;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub details: String,
    pub millis: u128,
}

impl CriterionReport {
    /// One human-readable pass/fail line.
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} {}  {} — {} [{} ms]",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.details,
            self.millis
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub seed: u64,
    pub pass: bool,
    pub criteria: Vec<CriterionReport>,
}

pub fn run_criterion(id: u32, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let (name, (pass, details)) = match id {
        1 => ("bs normal form vs rewriting", criterion_1()),
        2 => ("odd-power squares collapse", criterion_2()),
        3 => ("g2 product law vs oracle", criterion_3()),
        4 => ("g1 relations and torsion", criterion_4()),
        5 => ("model relation and freeness", criterion_5(seed)),
        6 => ("index values", criterion_6(seed)),
        7 => ("index conjugacy invariance", criterion_7(seed)),
        8 => ("virtual wandering", criterion_8(seed)),
        9 => ("non-wandering witness", criterion_9()),
        10 => ("circle actions", criterion_10()),
        11 => ("g2 order laws", criterion_11()),
        12 => ("limit-set sanity", criterion_12(seed)),
        other => panic!("criterion {other} does not exist"),
    };
    CriterionReport {
        id,
        name,
        pass,
        details,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_all(seed: u64) -> SuiteReport {
    let criteria: Vec<CriterionReport> = (1..=CRITERIA_COUNT)
        .map(|id| run_criterion(id, seed))
        .collect();
    SuiteReport {
        schema: 1,
        seed,
        pass: criteria.iter().all(|c| c.pass),
        criteria,
    }
}

// ---------------------------------------------------------------------------
// helpers

type Letters = Vec<(u8, i8)>;

/// All raw letter sequences over `rank` generators, grouped by length.
fn raw_sequences(rank: u8, max_len: usize) -> Vec<Vec<Letters>> {
    let mut levels: Vec<Vec<Letters>> = vec![vec![Vec::new()]];
    for len in 1..=max_len {
        let mut level = Vec::with_capacity(levels[len - 1].len() * rank as usize * 2);
        for word in &levels[len - 1] {
            for g in 0..rank {
                for s in [1i8, -1] {
                    let mut next = word.clone();
                    next.push((g, s));
                    level.push(next);
                }
            }
        }
        levels.push(level);
    }
    levels
}

fn word_from_letters(alphabet: &Alphabet, letters: &[(u8, i8)]) -> ReducedWord {
    let runs: Vec<(usize, i64)> = letters
        .iter()
        .map(|&(g, s)| (g as usize, s as i64))
        .collect();
    ReducedWord::from_runs(alphabet.clone(), &runs).expect("valid letters")
}

// ---------------------------------------------------------------------------
// criteria

/// Normal-form invariance under single relator insertions for every raw word
/// of length ≤ 8, plus the homomorphism law against the closed product for
/// every pair of raw words with combined length ≤ 8. Exhaustive.
fn criterion_1() -> (bool, String) {
    let alphabet = Alphabet::bs();
    let levels = raw_sequences(2, 8);
    let relators: [&[(u8, i8)]; 2] = [
        &[(0, 1), (1, 1), (0, -1), (1, 1)],   // a b a⁻¹ b
        &[(1, -1), (0, 1), (1, -1), (0, -1)], // its inverse
    ];
    let mut insertion_cases = 0u64;
    let nfs: Vec<Vec<BsElement>> = levels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|w| bs_reduce(&word_from_letters(&alphabet, w)).expect("desk scale"))
                .collect()
        })
        .collect();
    for (len, level) in levels.iter().enumerate() {
        for (idx, word) in level.iter().enumerate() {
            let nf = nfs[len][idx];
            for relator in relators {
                for cut in 0..=word.len() {
                    let mut spliced: Letters = Vec::with_capacity(word.len() + 4);
                    spliced.extend_from_slice(&word[..cut]);
                    spliced.extend_from_slice(relator);
                    spliced.extend_from_slice(&word[cut..]);
                    let other = bs_reduce(&word_from_letters(&alphabet, &spliced)).unwrap();
                    if other != nf {
                        return (
                            false,
                            format!("relator insertion changed a normal form at length {len}"),
                        );
                    }
                    insertion_cases += 1;
                }
            }
        }
    }
    let mut pair_cases = 0u64;
    for i in 0..levels.len() {
        for j in 0..levels.len() - i {
            for (iu, u) in levels[i].iter().enumerate() {
                for (iv, v) in levels[j].iter().enumerate() {
                    let mut uv = u.clone();
                    uv.extend_from_slice(v);
                    let direct = bs_reduce(&word_from_letters(&alphabet, &uv)).unwrap();
                    let composed = bs_multiply(nfs[i][iu], nfs[j][iv]).unwrap();
                    if direct != composed {
                        return (false, format!("homomorphism failed at lengths {i}+{j}"));
                    }
                    pair_cases += 1;
                }
            }
        }
    }
    (
        true,
        format!("{insertion_cases} relator insertions, {pair_cases} product pairs"),
    )
}

/// `(a^p b^q)² = a^{2p}` for every odd `|p| ≤ 7` and `|q| ≤ 7`, exactly.
fn criterion_2() -> (bool, String) {
    let mut cases = 0u32;
    for p in (-7i64..=7).filter(|p| p.rem_euclid(2) == 1) {
        for q in -7i64..=7 {
            let x = BsElement::new(p, q);
            let sq = bs_multiply(x, x).unwrap();
            if sq != BsElement::new(2 * p, 0) {
                return (false, format!("square of ({p},{q}) is {sq}"));
            }
            cases += 1;
        }
    }
    (true, format!("{cases} squares collapse exactly"))
}

/// The closed product law against the rewriting oracle on all normal-form
/// pairs with word parts of length ≤ 4 and β-exponents ≤ 3. Counts how many
/// cases separate the implemented second-factor sign convention from the
/// first-factor alternative; the oracle decides for the former on all of them.
fn criterion_3() -> (bool, String) {
    let f2 = Alphabet::f2();
    let raw = Alphabet::g2_raw();
    let words = reduced_words_up_to(&f2, 4);
    let to_raw = |w: &ReducedWord, n: i64| -> ReducedWord {
        let mut runs: Vec<(usize, i64)> = w
            .runs()
            .iter()
            .map(|&(g, e)| (if g == 0 { 0usize } else { 2 }, e))
            .collect();
        runs.push((1, n));
        ReducedWord::from_runs(raw.clone(), &runs).expect("valid raw word")
    };
    let mut cases = 0u64;
    let mut convention_sensitive = 0u64;
    for w in &words {
        for n in -3i64..=3 {
            let x = G2Element::new(w.clone(), n).unwrap();
            let x_raw = to_raw(w, n);
            for w2 in &words {
                for n2 in -3i64..=3 {
                    let y = G2Element::new(w2.clone(), n2).unwrap();
                    let product = g2_multiply(&x, &y).unwrap();
                    let raw_word = x_raw.concat(&to_raw(w2, n2)).unwrap();
                    let oracle = g2_rewrite(&raw_word).unwrap();
                    if product != oracle {
                        return (
                            false,
                            format!("law and oracle disagree at x=({x}), y=({y})"),
                        );
                    }
                    // the two printed conventions differ exactly when the
                    // α-parities of the factors differ and the left β-power
                    // is nonzero
                    if n != 0 && (x.sigma() - y.sigma()).rem_euclid(2) == 1 {
                        convention_sensitive += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    (
        true,
        format!(
            "{cases} products match the oracle ({convention_sensitive} separate the sign conventions)"
        ),
    )
}

/// Exact defining relations for the affine model and absence of torsion on
/// the radius-8 generator ball.
fn criterion_4() -> (bool, String) {
    let alpha = g1_generator(G1Generator::Alpha);
    let beta = g1_generator(G1Generator::Beta);
    let a2 = alpha.pow(2);
    let b2 = beta.pow(2);
    if beta.compose(&a2).compose(&beta.inverse()) != a2.inverse() {
        return (false, "first relation fails".into());
    }
    if alpha.compose(&b2).compose(&alpha.inverse()) != b2.inverse() {
        return (false, "second relation fails".into());
    }
    let ball = crate::derived_groups::g1_ball(8);
    for f in &ball {
        if !f.is_identity() && g1_element_order(f) != ElementOrder::Infinite {
            return (false, format!("torsion element found: {f}"));
        }
    }
    (
        true,
        format!("relations exact; {} ball elements torsion-free", ball.len()),
    )
}

/// Sampled sup error of `a b a⁻¹` against `b⁻¹` below 1e-9 over 10⁴ seeded
/// points, and sampled displacement above 1e-3 for every `a^p b^q` with
/// `0 < |p| + |q| ≤ 6`.
fn criterion_5(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = verify_relation(10_000, 1e-9, &mut rng);
    (
        report.pass,
        format!(
            "sup relation error {:.2e}; min displacement {:.3e} at a^{} b^{}",
            report.sup_relation_error,
            report.min_displacement,
            report.worst_element.p,
            report.worst_element.q
        ),
    )
}

/// `I(b, a^k) = -k/2` for `k ∈ {-3..3} \ {0}` with pre-rounding residual
/// below 1e-6.
fn criterion_6(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6);
    let b = ModelMap::b();
    let seed_point = PlanePoint::new(
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(-1.0..1.0),
    );
    let mut worst_residual: f64 = 0.0;
    for k in [-3i64, -2, -1, 1, 2, 3] {
        match index(&b, BsElement::new(k, 0), seed_point, 1e-6) {
            Ok(v) => {
                if v.half_units != -k {
                    return (false, format!("index at k={k} is {}", v.value()));
                }
                worst_residual = worst_residual.max(v.residual);
            }
            Err(e) => return (false, format!("index at k={k} failed: {e}")),
        }
    }
    (
        true,
        format!("all six values -k/2; worst residual {worst_residual:.2e}"),
    )
}

/// The index is unchanged by five seeded conjugations that commute with the
/// quarter-turn: undulations with quarter-turn period in θ and shears along
/// θ driven by r.
fn criterion_7(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7);
    let b = ModelMap::b();
    for case in 0..5u32 {
        let amp = rng.gen_range(0.1..0.35);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let seed_point = PlanePoint::new(rng.gen_range(0.0..6.0), rng.gen_range(-1.0..1.0));
        let (value, expected) = if case % 2 == 0 {
            let m = 4.0 * rng.gen_range(1..=3) as f64;
            let h = move |p: PlanePoint| {
                PlanePoint::new(p.theta, p.r + amp * (m * p.theta + phase).sin())
            };
            let h_inv = move |p: PlanePoint| {
                PlanePoint::new(p.theta, p.r - amp * (m * p.theta + phase).sin())
            };
            let conj = move |x: PlanePoint| h(b.apply(h_inv(x)));
            (index(&conj, BsElement::new(1, 0), seed_point, 1e-6), -1)
        } else {
            let freq = rng.gen_range(0.5..2.0);
            let h = move |p: PlanePoint| {
                PlanePoint::new(p.theta + amp * (freq * p.r + phase).sin(), p.r)
            };
            let h_inv = move |p: PlanePoint| {
                PlanePoint::new(p.theta - amp * (freq * p.r + phase).sin(), p.r)
            };
            let conj = move |x: PlanePoint| h(b.apply(h_inv(x)));
            (index(&conj, BsElement::new(2, 0), seed_point, 1e-6), -2)
        };
        match value {
            Ok(v) if v.half_units == expected => {}
            Ok(v) => return (false, format!("case {case}: index moved to {}", v.value())),
            Err(e) => return (false, format!("case {case}: {e}")),
        }
    }
    (true, "five conjugated indices unchanged".into())
}

/// Twenty seeded free disks stay disjoint from their images under the whole
/// exponent box `a^{2p} b^q`, `|p|, |q| ≤ 5`, `(p, q) ≠ (0, 0)`.
fn criterion_8(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x8);
    let mut disks = 0u32;
    let mut min_clearance = f64::INFINITY;
    while disks < 20 {
        let d = Disk::new(
            PlanePoint::new(
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(-1.0..1.0),
            ),
            rng.gen_range(0.05..0.12),
        )
        .unwrap();
        let report = wandering_check(&d, 5, 5);
        if !report.precondition_ok {
            return (
                false,
                format!(
                    "seeded disk at ({:.3}, {:.3}) radius {:.3} is not free for b",
                    d.center.theta, d.center.r, d.radius
                ),
            );
        }
        if !report.pass {
            let bad = report
                .cases
                .iter()
                .find(|c| !c.separation.is_disjoint())
                .unwrap();
            return (
                false,
                format!(
                    "disk {disks}: image (2p,q)=({},{}) not disjoint",
                    2 * bad.p,
                    bad.q
                ),
            );
        }
        for case in &report.cases {
            if let crate::plane_model::Separation::Disjoint { clearance } = case.separation {
                min_clearance = min_clearance.min(clearance);
            }
        }
        disks += 1;
    }
    (
        true,
        format!("20 disks × 120 images disjoint; min clearance {min_clearance:.3}"),
    )
}

/// A disk meeting the line θ = π/2 meets some image `b^{±n} a (D)` with
/// `n ≤ 50`.
fn criterion_9() -> (bool, String) {
    let d = Disk::new(PlanePoint::new(std::f64::consts::FRAC_PI_2, 0.0), 0.3).unwrap();
    match nonwandering_witness(&d, 50) {
        crate::plane_model::NonwanderingOutcome::Found { n, sign, .. } => (
            true,
            format!(
                "witness at n = {n}, sign {}",
                if sign > 0 { "+" } else { "-" }
            ),
        ),
        crate::plane_model::NonwanderingOutcome::NotFound => {
            (false, "no witness up to n = 50".into())
        }
    }
}

/// Rotation number 1/2 for the swap generator at 10⁴ iterates, both
/// crystallographic relations within 1e-7 on a 1024-point grid, and the
/// fixed-point-structure check on the compactified line action.
fn criterion_10() -> (bool, String) {
    let (a, b) = g1_circle_generators();
    let rho = rotation_number(&b, 10_000);
    if (rho - 0.5).abs() > 2e-4 {
        return (false, format!("rotation number {rho}"));
    }
    let grid = 1024;
    let sup = |f: &CircleMap, g: &CircleMap| -> f64 {
        (0..grid)
            .map(|k| {
                let x = k as f64 / grid as f64;
                circle_dist(f.lift(x), g.lift(x))
            })
            .fold(0.0, f64::max)
    };
    let rel1 = sup(
        &CircleMap::compose_all(vec![a.clone(), b.compose(&b), a.inverse()]),
        &b.inverse().compose(&b.inverse()),
    );
    let rel2 = sup(
        &CircleMap::compose_all(vec![b.clone(), a.compose(&a), b.inverse()]),
        &a.inverse().compose(&a.inverse()),
    );
    if rel1 > 1e-7 || rel2 > 1e-7 {
        return (false, format!("relation sup errors {rel1:.2e}, {rel2:.2e}"));
    }
    let (fa, fb) = compactified_line_action();
    let report = fixed_point_structure_check(&fa, &fb, 2048);
    if report.status != FixedPointStatus::Pass {
        return (false, format!("fixed-point check: {}", report.detail));
    }
    (
        true,
        format!("ρ(b) = {rho:.5}; relation sups {rel1:.1e}, {rel2:.1e}; fixed-point check passed"),
    )
}

/// Order laws on all normal forms with `|w| ≤ 2`, `|n| ≤ 2`: coherent
/// totality, antisymmetry, left-invariance, and closure of the positive cone.
fn criterion_11() -> (bool, String) {
    let ord = G2Order::default();
    let words = reduced_words_up_to(&Alphabet::f2(), 2);
    let mut sample = Vec::new();
    for w in &words {
        for n in -2i64..=2 {
            sample.push(G2Element::new(w.clone(), n).unwrap());
        }
    }
    for x in &sample {
        for y in &sample {
            let c = g2_compare(x, y, &ord);
            if g2_compare(y, x, &ord) != c.reverse() {
                return (false, format!("asymmetry broken at {x}, {y}"));
            }
            if (c == std::cmp::Ordering::Equal) != (x == y) {
                return (false, format!("equality mismatch at {x}, {y}"));
            }
        }
    }
    for z in &sample {
        for x in &sample {
            for y in &sample {
                let zx = g2_multiply(z, x).unwrap();
                let zy = g2_multiply(z, y).unwrap();
                if g2_compare(&zx, &zy, &ord) != g2_compare(x, y, &ord) {
                    return (
                        false,
                        format!("left-invariance broken at z={z}, x={x}, y={y}"),
                    );
                }
            }
        }
    }
    let identity = G2Element::identity();
    let positives: Vec<&G2Element> = sample
        .iter()
        .filter(|x| g2_compare(x, &identity, &ord) == std::cmp::Ordering::Greater)
        .collect();
    for u in &positives {
        for v in &positives {
            let uv = g2_multiply(u, v).unwrap();
            if g2_compare(&uv, &identity, &ord) != std::cmp::Ordering::Greater {
                return (false, format!("cone not closed at {u}, {v}"));
            }
        }
    }
    (
        true,
        format!(
            "{} elements: order laws hold; cone of {} closed",
            sample.len(),
            positives.len()
        ),
    )
}

/// Limit-set estimator sanity at grid 0.01: for the squeeze map and a seeded
/// free disk across an invariant line the estimate is nonempty and disjoint
/// from the disk and its first iterates; for the quarter-turn it is empty.
fn criterion_12(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC);
    let grid = 0.01;
    let n_max = 24;
    let d = Disk::new(
        PlanePoint::new(
            std::f64::consts::FRAC_PI_2 + rng.gen_range(-0.02..0.02),
            rng.gen_range(-0.5..0.5),
        ),
        rng.gen_range(0.08..0.12),
    )
    .unwrap();
    let set = CompactSet::Disk(d);
    let cloud = match limit_set_estimate(&set, &ModelMap::b(), n_max, grid) {
        Ok(c) => c,
        Err(e) => return (false, format!("estimator failed: {e}")),
    };
    if cloud.is_empty() {
        return (false, "squeeze estimate came out empty".into());
    }
    // independent disjointness check against the disk and its first iterates
    let early_limit = (n_max / 2).max(1) / 2;
    for n in 0..=early_limit as i64 {
        let g = crate::klein_group::bs_pow(BsElement::new(0, 1), n).unwrap();
        for src in sample_disk_for_check(&d) {
            let img = model_apply(g, src).unwrap();
            if cloud.cells.contains(&PointCloud::cell_of(grid, &img)) {
                return (false, format!("estimate touches iterate {n}"));
            }
        }
    }
    let empty = match limit_set_estimate(&set, &ModelMap::a(), n_max, grid) {
        Ok(c) => c,
        Err(e) => return (false, format!("estimator failed on the turn: {e}")),
    };
    if !empty.is_empty() {
        return (false, format!("turn estimate has {} cells", empty.len()));
    }
    (
        true,
        format!(
            "squeeze estimate: {} cells, disjoint from iterates 0..={early_limit}; turn estimate empty",
            cloud.len()
        ),
    )
}

fn sample_disk_for_check(d: &Disk) -> Vec<PlanePoint> {
    let mut pts = vec![d.center];
    let n = 512;
    for ring in [0.33, 0.66, 1.0] {
        for k in 0..n {
            let ang = k as f64 / n as f64 * std::f64::consts::TAU;
            pts.push(PlanePoint::new(
                d.center.theta + d.radius * ring * ang.cos(),
                d.center.r + d.radius * ring * ang.sin(),
            ));
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_deterministic() {
        let a = run_criterion(6, 123);
        let b = run_criterion(6, 123);
        assert_eq!(a.pass, b.pass);
        assert_eq!(a.details, b.details);
    }
}
