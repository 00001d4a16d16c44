use super::{SeqWindow, TaylorPoly, TwistedSeries};
use crate::qsifield::QsiStructure;
use crate::ratfunc::RatFunc;
use crate::ring::Difference;
use crate::scalar::ScalarQ;

/// `u[a] = [a, σ(a), ..., σ^{M-1}(a)]`.
pub fn euler(a: &RatFunc, m: usize) -> SeqWindow<RatFunc> {
    euler_with(a, m)
}

/// [`euler`] for any ring with an endomorphism.
pub fn euler_with<R: Difference>(a: &R, m: usize) -> SeqWindow<R> {
    let mut values = Vec::with_capacity(m);
    let mut x = a.clone();
    for n in 0..m {
        if n > 0 {
            x = x.sigma();
        }
        values.push(x.clone());
    }
    SeqWindow::with_proto(a, values)
}

/// `ι(a) = Σ_{i<N} X^i u[θ^(i)(a)]` for the canonical structure on K(t).
pub fn hopf_morphism(a: &RatFunc, n: usize, m: usize) -> TwistedSeries<SeqWindow<RatFunc>> {
    hopf_morphism_with(&QsiStructure::canonical(), a, n, m)
}

/// `ι` for any structure; `u[·]` iterates the structure's `σ`.
pub fn hopf_morphism_with(
    s: &QsiStructure,
    a: &RatFunc,
    n: usize,
    m: usize,
) -> TwistedSeries<SeqWindow<RatFunc>> {
    let table = s.theta_table(n.saturating_sub(1), a);
    let coeffs = table
        .iter()
        .take(n)
        .map(|b| {
            let mut values = Vec::with_capacity(m);
            let mut x = b.clone();
            for k in 0..m {
                if k > 0 {
                    x = s.sigma(&x);
                }
                values.push(x.clone());
            }
            SeqWindow::with_proto(&RatFunc::zero(), values)
        })
        .collect();
    TwistedSeries::from_coeffs(&SeqWindow::with_proto(&RatFunc::zero(), vec![]), coeffs)
}

/// Derivations of K(y) used by the Taylor morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// `d/dy`.
    D,
    /// `y d/dy`.
    Euler,
}

impl Derivation {
    pub fn apply(&self, a: &RatFunc) -> RatFunc {
        match self {
            Derivation::D => a.ddt(),
            Derivation::Euler => &RatFunc::t() * &a.ddt(),
        }
    }
}

/// `ι(a) = Σ_{n<N} δ^n(a) X^n / n!`.
pub fn taylor(a: &RatFunc, derivation: Derivation, n: usize) -> TaylorPoly<RatFunc> {
    let mut coeffs = Vec::with_capacity(n);
    let mut d = a.clone();
    let mut fact = ScalarQ::one();
    for k in 0..n {
        if k > 0 {
            d = derivation.apply(&d);
            fact = &fact * &ScalarQ::from_int(k as i64);
        }
        coeffs.push(d.scale(&fact.inv().expect("k! is nonzero")));
    }
    TaylorPoly::from_coeffs(&RatFunc::zero(), coeffs, "X")
}
