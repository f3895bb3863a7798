//! Independent reference implementations used only by tests.
//!
//! Everything here recomputes results the main kernel also produces, by a
//! different route: the geometric product works on explicit index lists with
//! insertion-sort merging (the kernel counts inversions on bitmasks), and
//! join/meet/incidence go through coordinate span arithmetic instead of
//! duality tables. Only the `Multivector` container type is shared.

mod linalg;
mod product;
mod span;

pub use linalg::{nullspace, rank, solve};
pub use product::{oracle_blade_product, oracle_geometric};
pub use span::{
    blade_factor, oracle_closest_point, oracle_incidence, oracle_join, oracle_meet, proportional,
    rewedge, SpanSet,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("input is not a homogeneous blade")]
    NonHomogeneous,
    #[error("input blade is not simple")]
    NonSimple,
    #[error("flat has no finite point")]
    NoFinitePoint,
}
