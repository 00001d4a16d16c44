//! The Hopf algebra `h_q = Q(q)<u, u^-1, v> / (uv - q^-1 vu)` and its
//! points `[[e, f], [0, 1]]` in noncommutative test algebras.

mod hopf;
mod lemmas;
mod matrix;

pub use hopf::{
    antipode_closed_form, hq_antipode, hq_delta, hq_epsilon, hq_mul, hq_spec, structure_witnesses,
    verify_hopf_axioms, HopfQElement, HopfTensor, Monomial,
};
pub use matrix::{hq_matrix_inverse, hq_matrix_mul, relation_residual, Convention, HqError, HqMatrix};
pub use lemmas::{random_point, verify_matrix_lemmas};
