//! Exact computation with q-skew iterative σ-differential algebras over the
//! rational function field Q(q), the quantum group `h_q`, and the
//! infinitesimal Galois deformations of the field `(C(t), σ(t) = qt)`.

pub mod galoisdeform;
pub mod ncalg;
pub mod poly;
pub mod qcomb;
pub mod qhyper;
pub mod qsifield;
pub mod quantumgroup;
pub mod ratfunc;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod seqseries;

pub use qcomb::{eval_at, qbinom, qfact, qint, qsym};
pub use scalar::{ScalarError, ScalarQ};
