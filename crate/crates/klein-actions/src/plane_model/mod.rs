//! The model free action on the universal cover of the punctured plane:
//! the lifted maps themselves, the half-integer index invariant, disk
//! wandering and non-wandering checks, and limit-set estimation.

mod index;
mod limit;
mod maps;
mod wandering;

pub use index::{index, index_along, index_curve, CurveSample, IndexValue};
pub use limit::{limit_set_estimate, CompactSet, PointCloud};
pub use maps::{
    matrix_action, model_apply, verify_relation, FreenessRow, ModelMap, PlaneMap, PlanePoint,
    RelationReport, FREENESS_DISPLACEMENT_FLOOR, MAX_B_POWER,
};
pub use wandering::{
    nonwandering_witness, separation, wandering_check, Disk, NonwanderingOutcome, Separation,
    WanderingCase, WanderingReport, SEPARATION_MARGIN,
};
