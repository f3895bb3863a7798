//! Dense Clifford-algebra kernel for the dual-space model of 1- to
//! 4-dimensional metric geometries.
//!
//! Elements live in one of two algebras per dimension `n`: the dual algebra
//! (basis vectors `e0..en`, carrying the metric) or the target algebra
//! (basis vectors `E0..En`, metric-free here). Multivectors are stored dense,
//! indexed by basis-blade bitmask.

mod exp;
mod grade;
mod labels;
mod multivector;
mod norm;
mod product;
mod signature;
mod text;

pub use exp::{exp_trig, TrigFn};
pub use grade::{grade_select, grade_sign, involute, reverse, GradeSet};
pub use labels::{blade_label, label_table, parse_blade_label, LabelEntry};
pub use multivector::{Multivector, Side};
pub use product::{blade_product, commutator, geometric, inner, outer};
pub use signature::{Metric, Signature};
pub use text::{format_multivector, format_scalar, parse_multivector};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("metric undefined on target algebra")]
    MetricOnTarget,
    #[error("norm undefined for this multivector")]
    NormUndefined,
    #[error("not invertible")]
    NotInvertible,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("side mismatch")]
    SideMismatch,
    #[error("exp did not converge within the iteration cap")]
    ExpDiverged,
    #[error("invalid dimension {0}; supported range is 1..=4")]
    InvalidDimension(u8),
    #[error("{0}")]
    Parse(String),
}

pub use norm::{inverse, norm, study_conjugate, study_parts, StudyNumber};
