//! Sequence windows `F(N, R)`, twisted power series `(R, σ)[[X]]`,
//! truncated Taylor polynomials and the universal morphisms into them.
//!
//! Everything here is finite: a window holds `f(0..M)`, a series holds
//! `a_0..a_{N-1}`. Shifting a window drops its first entry, so it shrinks;
//! series drop terms of degree `≥ N` silently. Comparisons go through
//! [`Certify`](crate::ring::Certify) and report the depth that was
//! actually compared.

mod morphism;
mod taylor;
mod twisted;
mod verify;
mod window;

use thiserror::Error;

pub use morphism::{euler, euler_with, hopf_morphism, hopf_morphism_with, taylor, Derivation};
pub use taylor::TaylorPoly;
pub use twisted::{ts_mul, ts_sigma, ts_theta, TwistedAlgebra, TwistedSeries};
pub use verify::{verify_euler, verify_hopf_morphism, verify_taylor};
pub use window::{q_sequence, q_sequence_in, seq_shift, SeqWindow};

/// Default series order.
pub const DEFAULT_N: usize = 8;
/// Default window length.
pub const DEFAULT_M: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("cannot shift an empty window")]
    EmptyWindow,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}
