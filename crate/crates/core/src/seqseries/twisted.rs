use std::fmt;
use std::marker::PhantomData;

use super::taylor::series_terms;
use super::SeqError;
use crate::qcomb::{qbinom, qint};
use crate::qsifield::QsiAlgebra;
use crate::ring::{Certify, Depth, Difference, QAlgebra, Ring};
use crate::scalar::ScalarQ;

/// `Σ_{i<N} X^i a_i` with `a X = X σ(a)`.
///
/// The product is `Σ_l X^l Σ_{i+j=l} σ^j(a_i) b_j`, truncated at the smaller
/// order. [`ts_mul`] insists on equal orders.
#[derive(Clone)]
pub struct TwistedSeries<R> {
    coeffs: Vec<R>,
    proto: R,
}

impl<R: Difference> TwistedSeries<R> {
    pub fn from_coeffs(proto: &R, coeffs: Vec<R>) -> Self {
        TwistedSeries {
            coeffs,
            proto: proto.zero_like(),
        }
    }

    /// `a` as a series of order `n`.
    pub fn constant(a: R, n: usize) -> Self {
        Self::monomial(a, 0, n)
    }

    /// `X^k a` at order `n`.
    pub fn monomial(a: R, k: usize, n: usize) -> Self {
        let proto = a.zero_like();
        let mut coeffs = vec![proto.clone(); n];
        if k < n {
            coeffs[k] = a;
        }
        TwistedSeries { coeffs, proto }
    }

    /// `X` with unit coefficient taken from `proto`.
    pub fn x(proto: &R, n: usize) -> Self {
        Self::monomial(proto.one_like(), 1, n)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.proto.clone())
    }

    pub fn truncate(&self, n: usize) -> Self {
        TwistedSeries {
            coeffs: self.coeffs.iter().take(n).cloned().collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn map<S: Difference>(&self, proto: &S, f: impl Fn(&R) -> S) -> TwistedSeries<S> {
        TwistedSeries::from_coeffs(proto, self.coeffs.iter().map(f).collect())
    }

    fn product(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        // powers[i][j] = σ^j(a_i), needed for i + j < n
        let powers: Vec<Vec<R>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(n - i);
                let mut a = self.coeffs[i].clone();
                for j in 0..n - i {
                    if j > 0 {
                        a = a.sigma();
                    }
                    row.push(a.clone());
                }
                row
            })
            .collect();
        // zero terms are kept so that the window of every coefficient is
        // the same whatever the values
        let coeffs = (0..n)
            .map(|l| {
                (0..=l)
                    .map(|i| powers[i][l - i].times(&rhs.coeffs[l - i]))
                    .reduce(|a, b| a.plus(&b))
                    .unwrap()
            })
            .collect();
        TwistedSeries {
            coeffs,
            proto: self.proto.clone(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, SeqError> {
        if self.order() != rhs.order() {
            return Err(SeqError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(self.product(rhs))
    }

    /// `Σ(Σ X^i a_i) = Σ X^i q^i σ(a_i)`.
    pub fn sigma_series(&self) -> Self {
        TwistedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a.sigma().scale(&ScalarQ::q_pow(i as i64)))
                .collect(),
            proto: self.proto.clone(),
        }
    }

    /// `Θ^(1)(Σ X^i a_i) = Σ [i]_q X^{i-1} a_i`; the order drops by one.
    pub fn theta1(&self) -> Self {
        TwistedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.scale(&qint(i as u32)))
                .collect(),
            proto: self.proto.clone(),
        }
    }

    /// `Θ^(i) = Θ^i / [i]_q!`, so `Θ^(i)(X^{k+i} a) = C(k+i, i)_q X^k a`.
    pub fn theta(&self, i: usize) -> Self {
        TwistedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(i)
                .map(|(k, a)| a.scale(&qbinom(i as u32, (k - i) as u32)))
                .collect(),
            proto: self.proto.clone(),
        }
    }
}

/// Product of two series of the same order.
pub fn ts_mul<R: Difference>(
    s1: &TwistedSeries<R>,
    s2: &TwistedSeries<R>,
) -> Result<TwistedSeries<R>, SeqError> {
    s1.try_mul(s2)
}

pub fn ts_sigma<R: Difference>(s: &TwistedSeries<R>) -> TwistedSeries<R> {
    s.sigma_series()
}

pub fn ts_theta<R: Difference>(i: usize, s: &TwistedSeries<R>) -> TwistedSeries<R> {
    s.theta(i)
}

impl<R: Ring> PartialEq for TwistedSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for TwistedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// `a0 + X*(a1) + X^2*(a2) + ...`.
impl<R: Ring + fmt::Display> fmt::Display for TwistedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&series_terms(self.coeffs.iter(), "X"))
    }
}

impl<R: Difference> Ring for TwistedSeries<R> {
    fn zero_like(&self) -> Self {
        TwistedSeries {
            coeffs: self.coeffs.iter().map(Ring::zero_like).collect(),
            proto: self.proto.clone(),
        }
    }
    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        if let Some(c) = z.coeffs.first_mut() {
            *c = self.coeffs[0].one_like();
        }
        z
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        TwistedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.plus(b)).collect(),
            proto: self.proto.clone(),
        }
    }
    fn negate(&self) -> Self {
        self.map(&self.proto, Ring::negate)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
}

impl<R: Difference> QAlgebra for TwistedSeries<R> {
    fn scale(&self, c: &ScalarQ) -> Self {
        self.map(&self.proto, |a| a.scale(c))
    }
}

impl<R: Difference> Difference for TwistedSeries<R> {
    fn sigma(&self) -> Self {
        self.sigma_series()
    }
}

impl<R: Difference + Certify> Certify for TwistedSeries<R> {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        let mut depth = Depth {
            series_order: Some(self.order().min(other.order())),
            ..Depth::exact()
        };
        let mut equal = true;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            let (e, d) = a.agree(b);
            equal &= e;
            depth = depth.meet(d);
        }
        (equal, depth)
    }
}

/// `((R, σ)[[X]], Σ, Θ*)` as a qsi algebra.
pub struct TwistedAlgebra<R>(PhantomData<R>);

impl<R> TwistedAlgebra<R> {
    pub fn new() -> Self {
        TwistedAlgebra(PhantomData)
    }
}

impl<R> Default for TwistedAlgebra<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Difference + Certify + fmt::Display> QsiAlgebra for TwistedAlgebra<R> {
    type Elem = TwistedSeries<R>;

    fn q(&self) -> ScalarQ {
        ScalarQ::q()
    }

    fn sigma(&self, a: &Self::Elem) -> Self::Elem {
        a.sigma_series()
    }

    fn theta(&self, i: usize, a: &Self::Elem) -> Self::Elem {
        a.theta(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsifield::check_qsi_axioms;
    use crate::ratfunc::RatFunc;

    fn t() -> RatFunc {
        RatFunc::t()
    }

    fn x(n: usize) -> TwistedSeries<RatFunc> {
        TwistedSeries::x(&RatFunc::zero(), n)
    }

    fn c(a: RatFunc, n: usize) -> TwistedSeries<RatFunc> {
        TwistedSeries::constant(a, n)
    }

    #[test]
    fn coefficients_move_past_x_twisted() {
        let tx = ts_mul(&c(t(), 4), &x(4)).unwrap();
        let xt = ts_mul(&x(4), &c(t(), 4)).unwrap();
        assert_eq!(tx, TwistedSeries::monomial(t().sigma(), 1, 4));
        assert_eq!(xt, TwistedSeries::monomial(t(), 1, 4));
        assert_ne!(tx, xt);
        let s = c(t(), 4).plus(&x(4));
        assert_eq!(ts_mul(&s.one_like(), &s).unwrap(), s);
    }

    #[test]
    fn strict_product_checks_orders() {
        assert_eq!(ts_mul(&x(3), &x(4)), Err(SeqError::OrderMismatch(3, 4)));
    }

    #[test]
    fn sigma_and_theta_on_monomials() {
        assert_eq!(ts_sigma(&x(4)), x(4).scale(&ScalarQ::q()));
        assert_eq!(ts_sigma(&c(RatFunc::one(), 4)), c(RatFunc::one(), 4));
        assert_eq!(ts_theta(1, &x(4)), c(RatFunc::one(), 3));
        let x2 = ts_mul(&x(4), &x(4)).unwrap();
        assert_eq!(ts_theta(1, &x2), x(3).scale(&qint(2)));
        assert!(ts_theta(1, &c(t(), 4)).is_zero());
        assert_eq!(ts_theta(0, &x2), x2);
    }

    #[test]
    fn theta_powers_match_divided_powers() {
        let s = TwistedSeries::from_coeffs(&RatFunc::zero(), (0..6).map(|k| t().powi(k).unwrap()).collect());
        let mut p = s.clone();
        for i in 1..5u32 {
            p = p.theta1();
            let f = crate::qcomb::qfact(i);
            assert_eq!(s.theta(i as usize).scale(&f), p);
        }
    }

    #[test]
    fn printing() {
        let s = c(t(), 3).plus(&x(3));
        assert_eq!(s.to_string(), "t + X*(1)");
        assert_eq!(s.zero_like().to_string(), "0");
    }

    #[test]
    fn twisted_axioms_on_fixed_series() {
        let a = TwistedSeries::from_coeffs(&RatFunc::zero(), vec![t(), RatFunc::one(), t().inv().unwrap(), t() * t(), RatFunc::one(), t()]);
        let b = c(t(), 6).plus(&x(6));
        let r = check_qsi_axioms(&TwistedAlgebra::new(), &[a, b], 5);
        assert!(r.all_pass(), "{r:?}");
    }
}
