//! One-dimensional actions: the simplest line action of the one-relator
//! group, its one-point compactification, a circle action of the
//! crystallographic group, and rotation numbers.

mod circle;
mod line;

pub use circle::{
    circle_dist, compactified_line_action, displacement_profile, fixed_point_structure_check,
    fixed_points, g1_circle_generators, rotation_number, CircleMap, FixedPointReport,
    FixedPointStatus, G1CircleGen,
};
pub use line::{line_action_generators, LineMap};
