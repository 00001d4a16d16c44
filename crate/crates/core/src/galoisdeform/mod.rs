//! Infinitesimal deformations of the universal morphism for `σ(t) = qt`.
//!
//! The hull is generated over `K(t)[[W]]` by `Q = [1, q, q^2, ...]` and
//! `X`, with `ι(t) = TQ + X` for `T = t + W`. A deformation over a test
//! algebra `A` is fixed by `h(Q) = eQ` and `h(X) = fQ + X`; it respects
//! `QX = q XQ` exactly when `ef = q fe`. That relation, and the order in
//! which matrix points act on deformations, are computed here rather than
//! assumed.

mod differential;
mod model;
mod suite;
mod torsor;

use thiserror::Error;

use crate::ncalg::NcError;
use crate::quantumgroup::HqError;
use crate::seqseries::SeqError;

pub use differential::{
    check_differential_solution, differential_example_check, differential_group_law, y_exp_x,
};
pub use model::{
    check_deformation, derive_commutation_relation, DeformationCandidate, DeformationReport,
    GaloisHullModel, ModelDepth, ModelSeries, RelationDescriptor,
};
pub use suite::{verify_relation_oracle, verify_torsor};
pub use torsor::{act, compose, derive_action_order, transporter, ActionOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),
    #[error("entries are not mutually commutative: {0}")]
    NotMutuallyCommutative(String),
    #[error("invalid group point: {0}")]
    InvalidGroupPoint(String),
    #[error("no transporter: {0}")]
    NoTransporter(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("not a polynomial in t: {0}")]
    NotPolynomial(String),
}

impl From<HqError> for DeformError {
    fn from(e: HqError) -> Self {
        match e {
            HqError::Nc(e) => DeformError::Nc(e),
            HqError::NotMutuallyCommutative(w) => DeformError::NotMutuallyCommutative(w),
            other => DeformError::InvalidGroupPoint(other.to_string()),
        }
    }
}
