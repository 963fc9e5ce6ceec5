//! Bounded-iteration limit-set estimates. The cloud keeps only grid cells
//! that recur across late iterates, so translated disks estimate to the
//! empty set while disks across a repelling line accumulate on the
//! neighbouring invariant lines. Writes the nonempty cloud to CSV.
//!
//! ```text
//! cargo run --example limit_sets
//! ```

use std::f64::consts::FRAC_PI_2;

use klein_actions::plane_model::{limit_set_estimate, CompactSet, Disk, ModelMap, PlanePoint};

fn main() {
    let grid = 0.01;
    let n_max = 24;

    println!("=== The quarter-turn translates: nothing accumulates ===");
    let interior = CompactSet::Disk(Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.1).unwrap());
    let cloud = limit_set_estimate(&interior, &ModelMap::a(), n_max, grid).unwrap();
    println!("  disk at (π/4, 0) under a: {} cells", cloud.len());

    println!("\n=== Strip-interior disks escape under the squeeze too ===");
    let cloud = limit_set_estimate(&interior, &ModelMap::b(), n_max, grid).unwrap();
    println!(
        "  disk at (π/4, 0) under b: {} cells (every orbit leaves compacta)",
        cloud.len()
    );

    println!("\n=== A disk across the repelling line θ = π/2 accumulates ===");
    let across = CompactSet::Disk(Disk::new(PlanePoint::new(FRAC_PI_2, 0.0), 0.1).unwrap());
    let cloud = limit_set_estimate(&across, &ModelMap::b(), n_max, grid).unwrap();
    println!("  disk at (π/2, 0) under b: {} cells", cloud.len());
    let (mut theta_lo, mut theta_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut r_lo, mut r_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in cloud.points() {
        theta_lo = theta_lo.min(p.theta);
        theta_hi = theta_hi.max(p.theta);
        r_lo = r_lo.min(p.r);
        r_hi = r_hi.max(p.r);
    }
    println!("  θ range [{theta_lo:.3}, {theta_hi:.3}] — hugging the lines θ = 0 and θ = π");
    println!("  r range [{r_lo:.3}, {r_hi:.3}] — filaments descending the attracting lines");

    let path = std::env::temp_dir().join("limit_set_cells.csv");
    std::fs::write(&path, cloud.to_csv()).unwrap();
    println!("\n  wrote {} rows to {}", cloud.len(), path.display());
}
