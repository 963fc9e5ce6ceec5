//! Virtual wandering and its boundary: a disk the squeeze lift moves off
//! itself never meets its images under a^{2p} b^q, yet a disk touching an
//! invariant vertical line is revisited by the odd-turn images b^{±n} a.
//!
//! ```text
//! cargo run --example wandering_disks
//! ```

use std::f64::consts::FRAC_PI_2;

use klein_actions::plane_model::{
    nonwandering_witness, wandering_check, Disk, NonwanderingOutcome, PlanePoint, Separation,
};

fn main() {
    println!("=== A free disk wanders under the even-turn subgroup ===");
    let d = Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.1).unwrap();
    let report = wandering_check(&d, 5, 5);
    println!(
        "  disk at (π/4, 0) radius 0.1: free for b? {}",
        report.precondition_ok
    );
    let mut min_clearance = f64::INFINITY;
    for case in &report.cases {
        if let Separation::Disjoint { clearance } = case.separation {
            min_clearance = min_clearance.min(clearance);
        }
    }
    println!(
        "  {} images a^(2p) b^q checked, all disjoint: {} (min clearance {:.3})",
        report.cases.len(),
        report.pass,
        min_clearance
    );

    println!("\n=== The odd-turn exception on an invariant line ===");
    let pinned = Disk::new(PlanePoint::new(FRAC_PI_2, 0.0), 0.3).unwrap();
    match nonwandering_witness(&pinned, 50) {
        NonwanderingOutcome::Found {
            n,
            sign,
            source_theta,
            source_r,
            image_theta,
            image_r,
        } => {
            println!(
                "  disk at (π/2, 0) radius 0.3 meets b^({}{n}) a (D):",
                if sign > 0 { "+" } else { "-" }
            );
            println!("    witness source ({source_theta:.4}, {source_r:.4})");
            println!("    lands at       ({image_theta:.4}, {image_r:.4})");
        }
        NonwanderingOutcome::NotFound => println!("  no witness found (unexpected)"),
    }

    println!("\n=== Away from the lines the odd-turn images stay clear ===");
    let off = Disk::new(PlanePoint::new(FRAC_PI_2 / 2.0, 0.0), 0.05).unwrap();
    match nonwandering_witness(&off, 20) {
        NonwanderingOutcome::Found { n, .. } => println!("  unexpected witness at n = {n}"),
        NonwanderingOutcome::NotFound => {
            println!("  disk at (π/4, 0) radius 0.05: no return up to n = 20")
        }
    }
}
