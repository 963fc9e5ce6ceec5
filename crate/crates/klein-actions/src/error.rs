//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A binary word operation received operands over different alphabets.
    #[error("alphabet mismatch: {{{left}}} vs {{{right}}}")]
    AlphabetMismatch { left: String, right: String },

    /// An exponent computation left the machine-word range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// A coordinate was NaN or infinite.
    #[error("non-finite coordinate")]
    NonFinite,

    /// Word or element syntax could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A compact set failed the free-set precondition for the given map.
    #[error("set is not free for the map ({0})")]
    NotFree(String),

    /// Adaptive curve refinement hit its depth cap without taming the turning.
    #[error("curve refinement exceeded depth {0}")]
    RefinementDepth(u32),

    /// The displacement vector vanished on the integration curve.
    #[error("displacement vector vanished on the curve near (theta={theta}, r={r})")]
    VanishingDisplacement { theta: f64, r: f64 },

    /// The winding sum did not land on a half-integer within tolerance.
    #[error("index value {value} is {residual} away from a half-integer (tol {tol})")]
    IndexResidual { value: f64, residual: f64, tol: f64 },

    /// A caller-supplied argument violated an operation precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
