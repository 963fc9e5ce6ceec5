//! Thin command-line front end over the library. Every subcommand maps to one
//! library operation or verification suite; output is JSON (reports carry a
//! top-level `"schema": 1`), point clouds and displacement profiles can also
//! be written as CSV.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage or input error.

use std::cmp::Ordering;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use klein_actions::derived_groups::{
    g1_ball, g1_element_order, g1_eval, g2_compare, g2_multiply, g2_rewrite, ElementOrder,
    G2Element, G2Order,
};
use klein_actions::free_words::{Alphabet, ReducedWord};
use klein_actions::klein_group::{bs_inverse, bs_multiply, bs_reduce, BsElement};
use klein_actions::line_circle::{
    compactified_line_action, displacement_profile, fixed_point_structure_check,
    g1_circle_generators, rotation_number, CircleMap, LineMap,
};
use klein_actions::plane_model::{
    index, limit_set_estimate, model_apply, nonwandering_witness, verify_relation, wandering_check,
    CompactSet, Disk, ModelMap, PlanePoint,
};
use klein_actions::verify::{run_all, run_criterion, CRITERIA_COUNT};

#[derive(Parser)]
#[command(name = "klein-actions", version, about = "Normal forms and planar dynamics for the Klein bottle group", long_about = None)]
struct Cli {
    /// Seed for every randomized sample set (reports are deterministic in it)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Numerical tolerance where a subcommand takes one
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Also write the output to this path
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Output format: `json`, or `csv` for point clouds and profiles
    #[arg(long, global = true, default_value = "json")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form arithmetic in the one-relator group ⟨a, b | aba⁻¹ = b⁻¹⟩
    Bs {
        #[command(subcommand)]
        cmd: BsCmd,
    },
    /// Normal forms, products and the left order of the three-generator group
    G2 {
        #[command(subcommand)]
        cmd: G2Cmd,
    },
    /// Exact affine arithmetic in the crystallographic group
    G1 {
        #[command(subcommand)]
        cmd: G1Cmd,
    },
    /// The lifted plane action: apply, index, wandering, limit sets
    Plane {
        #[command(subcommand)]
        cmd: PlaneCmd,
    },
    /// One-dimensional actions and rotation numbers
    Circle {
        #[command(subcommand)]
        cmd: CircleCmd,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum BsCmd {
    /// Reduce a raw word like "bab" or "a^2 b^-1" to its normal form
    Reduce { word: String },
    /// Multiply two normal forms given as JSON {"p":..,"q":..}
    Mul { x: String, y: String },
    /// Invert a normal form given as JSON
    Inv { x: String },
}

#[derive(Subcommand)]
enum G2Cmd {
    /// Reduce a raw word over {a, b, g} to its normal form w·βⁿ
    Reduce { word: String },
    /// Multiply two normal forms given as JSON {"w":"...","n":..}
    Mul { x: String, y: String },
    /// Compare two normal forms in the left-invariant order
    Compare { x: String, y: String },
}

#[derive(Subcommand)]
enum G1Cmd {
    /// Evaluate a word over {a, b} into the affine representation
    Eval { word: String },
    /// Order of the element named by a word (1 or infinite)
    Order { word: String },
    /// Exact relations plus torsion-freeness on a generator ball
    Verify {
        #[arg(long, default_value_t = 8)]
        radius: u32,
    },
}

#[derive(Args)]
struct DiskArgs {
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[arg(long)]
    radius: f64,
}

#[derive(Subcommand)]
enum PlaneCmd {
    /// Apply a^p b^q to a point of the cover
    Apply {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
    },
    /// Index of the squeeze map relative to the k-th turn power
    Index {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Disjointness of a free disk from its a^{2p} b^q images
    Wandering {
        #[command(flatten)]
        disk: DiskArgs,
        #[arg(long, default_value_t = 5)]
        p_range: i64,
        #[arg(long, default_value_t = 5)]
        q_range: i64,
    },
    /// Search for a returning image b^{±n} a (D) of a disk
    Nonwandering {
        #[command(flatten)]
        disk: DiskArgs,
        #[arg(long, default_value_t = 50)]
        n_max: u32,
    },
    /// Forward limit-set estimate of a disk under a or b.
    /// With --format csv: columns `theta,r`, one grid-cell center per row.
    Limitset {
        #[command(flatten)]
        disk: DiskArgs,
        /// which model map to iterate: "a" or "b"
        #[arg(long, default_value = "b")]
        map: String,
        #[arg(long, default_value_t = 24)]
        n_max: u32,
        #[arg(long, default_value_t = 0.01)]
        grid: f64,
    },
    /// Sampled relation and freeness report for the lifted action
    Verify {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum CircleCmd {
    /// The simplest line action: displacement profile and relation residual.
    /// With --format csv: columns `x,a_displacement,b_displacement`.
    Figure3 {
        #[arg(long, default_value_t = 512)]
        samples: usize,
    },
    /// The crystallographic circle action: relations and rotation numbers
    G1Action {
        #[arg(long, default_value_t = 10_000)]
        iterations: u32,
    },
    /// Rotation number of a named circle map
    Rotnum {
        /// one of: g1-a, g1-b, figure3-a, figure3-b, or rotation:<c>
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 10_000)]
        iterations: u32,
    },
    /// Fixed-point structure check for the compactified line action
    Lemma32 {
        #[arg(long, default_value_t = 2048)]
        grid: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every numbered criterion
    All,
    /// Run one numbered criterion
    Criterion {
        #[arg(long)]
        id: u32,
    },
}

enum Outcome {
    Ok(Value),
    OkCsv(String),
    /// verification ran and failed
    Failed(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Ok(value)) => {
            emit(&cli, &serde_json::to_string_pretty(&value).unwrap());
            ExitCode::SUCCESS
        }
        Ok(Outcome::OkCsv(text)) => {
            emit(&cli, &text);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(value)) => {
            emit(&cli, &serde_json::to_string_pretty(&value).unwrap());
            ExitCode::FAILURE
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) {
    // tolerate consumers like `head` closing the pipe early
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::File::create(path).and_then(|mut f| writeln!(f, "{text}")) {
            eprintln!("warning: could not write {}: {e}", path.display());
        }
    }
}

fn parse_bs(s: &str) -> Result<BsElement, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid element JSON: {e}"))
}

fn parse_g2(s: &str) -> Result<G2Element, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid element JSON: {e}"))
}

fn schema(value: Value) -> Value {
    let mut obj = value;
    if let Value::Object(map) = &mut obj {
        map.insert("schema".into(), json!(1));
    }
    obj
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Bs { cmd } => bs_cmd(cmd),
        Command::G2 { cmd } => g2_cmd(cmd),
        Command::G1 { cmd } => g1_cmd(cmd),
        Command::Plane { cmd } => plane_cmd(cli, cmd),
        Command::Circle { cmd } => circle_cmd(cli, cmd),
        Command::Verify { cmd } => verify_cmd(cli, cmd),
    }
}

fn bs_cmd(cmd: &BsCmd) -> Result<Outcome, String> {
    match cmd {
        BsCmd::Reduce { word } => {
            let w = ReducedWord::parse(&Alphabet::bs(), word).map_err(|e| e.to_string())?;
            let nf = bs_reduce(&w).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(serde_json::to_value(nf).unwrap()))
        }
        BsCmd::Mul { x, y } => {
            let product = bs_multiply(parse_bs(x)?, parse_bs(y)?).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(serde_json::to_value(product).unwrap()))
        }
        BsCmd::Inv { x } => Ok(Outcome::Ok(
            serde_json::to_value(bs_inverse(parse_bs(x)?)).unwrap(),
        )),
    }
}

fn g2_cmd(cmd: &G2Cmd) -> Result<Outcome, String> {
    match cmd {
        G2Cmd::Reduce { word } => {
            let w = ReducedWord::parse(&Alphabet::g2_raw(), word).map_err(|e| e.to_string())?;
            let nf = g2_rewrite(&w).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(serde_json::to_value(nf).unwrap()))
        }
        G2Cmd::Mul { x, y } => {
            let product = g2_multiply(&parse_g2(x)?, &parse_g2(y)?).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(serde_json::to_value(product).unwrap()))
        }
        G2Cmd::Compare { x, y } => {
            let ordering = g2_compare(&parse_g2(x)?, &parse_g2(y)?, &G2Order::default());
            let text = match ordering {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            };
            Ok(Outcome::Ok(json!({ "ordering": text })))
        }
    }
}

fn g1_cmd(cmd: &G1Cmd) -> Result<Outcome, String> {
    match cmd {
        G1Cmd::Eval { word } => {
            let w = ReducedWord::parse(&Alphabet::g1_raw(), word).map_err(|e| e.to_string())?;
            let f = g1_eval(&w).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(serde_json::to_value(f).unwrap()))
        }
        G1Cmd::Order { word } => {
            let w = ReducedWord::parse(&Alphabet::g1_raw(), word).map_err(|e| e.to_string())?;
            let f = g1_eval(&w).map_err(|e| e.to_string())?;
            let order = match g1_element_order(&f) {
                ElementOrder::Finite(k) => json!(k),
                ElementOrder::Infinite => json!("infinite"),
            };
            Ok(Outcome::Ok(json!({ "order": order })))
        }
        G1Cmd::Verify { radius } => {
            let ball = g1_ball(*radius);
            let torsion: Vec<String> = ball
                .iter()
                .filter(|f| !f.is_identity() && g1_element_order(f) != ElementOrder::Infinite)
                .map(|f| f.to_string())
                .collect();
            let pass = torsion.is_empty();
            let report = schema(json!({
                "radius": radius,
                "ball_size": ball.len(),
                "torsion_elements": torsion,
                "pass": pass,
            }));
            Ok(if pass {
                Outcome::Ok(report)
            } else {
                Outcome::Failed(report)
            })
        }
    }
}

fn plane_cmd(cli: &Cli, cmd: &PlaneCmd) -> Result<Outcome, String> {
    match cmd {
        PlaneCmd::Apply { p, q, theta, r } => {
            let image = model_apply(BsElement::new(*p, *q), PlanePoint::new(*theta, *r))
                .map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(json!({ "theta": image.theta, "r": image.r })))
        }
        PlaneCmd::Index { k } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let seed_point = PlanePoint::new(
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(-1.0..1.0),
            );
            let tol = cli.tol.unwrap_or(1e-6);
            let v = index(&ModelMap::b(), BsElement::new(*k, 0), seed_point, tol)
                .map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(
                json!({ "index": v.value(), "residual": v.residual }),
            ))
        }
        PlaneCmd::Wandering {
            disk,
            p_range,
            q_range,
        } => {
            let d = Disk::new(PlanePoint::new(disk.theta, disk.r), disk.radius)
                .map_err(|e| e.to_string())?;
            let report = wandering_check(&d, *p_range, *q_range);
            let pass = report.pass;
            let value = schema(serde_json::to_value(&report).unwrap());
            Ok(if pass {
                Outcome::Ok(value)
            } else {
                Outcome::Failed(value)
            })
        }
        PlaneCmd::Nonwandering { disk, n_max } => {
            let d = Disk::new(PlanePoint::new(disk.theta, disk.r), disk.radius)
                .map_err(|e| e.to_string())?;
            let outcome = nonwandering_witness(&d, *n_max);
            Ok(Outcome::Ok(schema(json!({
                "n_max": n_max,
                "outcome": serde_json::to_value(outcome).unwrap(),
            }))))
        }
        PlaneCmd::Limitset {
            disk,
            map,
            n_max,
            grid,
        } => {
            let d = Disk::new(PlanePoint::new(disk.theta, disk.r), disk.radius)
                .map_err(|e| e.to_string())?;
            let model = match map.as_str() {
                "a" => ModelMap::a(),
                "b" => ModelMap::b(),
                other => return Err(format!("unknown map \"{other}\" (use \"a\" or \"b\")")),
            };
            let cloud = limit_set_estimate(&CompactSet::Disk(d), &model, *n_max, *grid)
                .map_err(|e| e.to_string())?;
            if cli.format == "csv" {
                Ok(Outcome::OkCsv(cloud.to_csv()))
            } else {
                Ok(Outcome::Ok(schema(json!({
                    "grid": grid,
                    "n_max": n_max,
                    "cells": cloud.len(),
                    "points": cloud
                        .points()
                        .iter()
                        .map(|p| json!([p.theta, p.r]))
                        .collect::<Vec<_>>(),
                }))))
            }
        }
        PlaneCmd::Verify { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let tol = cli.tol.unwrap_or(1e-9);
            let report = verify_relation(*samples, tol, &mut rng);
            let pass = report.pass;
            let value = schema(serde_json::to_value(&report).unwrap());
            Ok(if pass {
                Outcome::Ok(value)
            } else {
                Outcome::Failed(value)
            })
        }
    }
}

fn circle_cmd(cli: &Cli, cmd: &CircleCmd) -> Result<Outcome, String> {
    match cmd {
        CircleCmd::Figure3 { samples } => {
            let (a, b) = compactified_line_action();
            let profile_a = displacement_profile(&a, *samples);
            let profile_b = displacement_profile(&b, *samples);
            if cli.format == "csv" {
                let mut out = String::from("x,a_displacement,b_displacement\n");
                for (pa, pb) in profile_a.iter().zip(&profile_b) {
                    out.push_str(&format!("{},{},{}\n", pa.0, pa.1, pb.1));
                }
                return Ok(Outcome::OkCsv(out));
            }
            let conj = CircleMap::compose_all(vec![a.clone(), b.clone(), a.inverse()]);
            let b_inv = b.inverse();
            let sup = (0..*samples)
                .map(|k| {
                    let x = k as f64 / *samples as f64;
                    klein_actions::line_circle::circle_dist(conj.lift(x), b_inv.lift(x))
                })
                .fold(0.0f64, f64::max);
            Ok(Outcome::Ok(schema(json!({
                "samples": samples,
                "relation_sup": sup,
                "a_profile": profile_a,
                "b_profile": profile_b,
            }))))
        }
        CircleCmd::G1Action { iterations } => {
            let (a, b) = g1_circle_generators();
            let grid = 1024;
            let sup = |f: &CircleMap, g: &CircleMap| -> f64 {
                (0..grid)
                    .map(|k| {
                        let x = k as f64 / grid as f64;
                        klein_actions::line_circle::circle_dist(f.lift(x), g.lift(x))
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
            Ok(Outcome::Ok(schema(json!({
                "rotation_number_a": rotation_number(&a, *iterations),
                "rotation_number_b": rotation_number(&b, *iterations),
                "relation_sup_1": rel1,
                "relation_sup_2": rel2,
            }))))
        }
        CircleCmd::Rotnum { map, iterations } => {
            let f = named_circle_map(map)?;
            Ok(Outcome::Ok(json!({
                "map": map,
                "iterations": iterations,
                "rotation_number": rotation_number(&f, *iterations),
            })))
        }
        CircleCmd::Lemma32 { grid } => {
            let (a, b) = compactified_line_action();
            let report = fixed_point_structure_check(&a, &b, *grid);
            let pass = report.status == klein_actions::line_circle::FixedPointStatus::Pass;
            let value = schema(serde_json::to_value(&report).unwrap());
            Ok(if pass {
                Outcome::Ok(value)
            } else {
                Outcome::Failed(value)
            })
        }
    }
}

fn named_circle_map(name: &str) -> Result<CircleMap, String> {
    if let Some(c) = name.strip_prefix("rotation:") {
        let c: f64 = c.parse().map_err(|_| format!("bad rotation \"{c}\""))?;
        return Ok(CircleMap::rotation(c));
    }
    let (g1a, g1b) = g1_circle_generators();
    match name {
        "g1-a" => Ok(g1a),
        "g1-b" => Ok(g1b),
        "figure3-a" => Ok(CircleMap::one_point(LineMap::Translation(1.0))),
        "figure3-b" => Ok(CircleMap::one_point(LineMap::SineFlow { time: 1.0 })),
        other => Err(format!(
            "unknown map \"{other}\" (g1-a, g1-b, figure3-a, figure3-b, rotation:<c>)"
        )),
    }
}

fn verify_cmd(cli: &Cli, cmd: &VerifyCmd) -> Result<Outcome, String> {
    match cmd {
        VerifyCmd::All => {
            let report = run_all(cli.seed);
            for c in &report.criteria {
                eprintln!("{}", c.line());
            }
            let pass = report.pass;
            let value = serde_json::to_value(&report).unwrap();
            Ok(if pass {
                Outcome::Ok(value)
            } else {
                Outcome::Failed(value)
            })
        }
        VerifyCmd::Criterion { id } => {
            if *id == 0 || *id > CRITERIA_COUNT {
                return Err(format!("criterion id must be in 1..={CRITERIA_COUNT}"));
            }
            let report = run_criterion(*id, cli.seed);
            eprintln!("{}", report.line());
            let pass = report.pass;
            let value = schema(serde_json::to_value(&report).unwrap());
            Ok(if pass {
                Outcome::Ok(value)
            } else {
                Outcome::Failed(value)
            })
        }
    }
}
