//! The field K(t) of rational functions in `t` over K = Q(q), with the
//! automorphism `σ(t) = qt` and the derivation `d/dt`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::poly::{zx_gcd, Poly};
use crate::ring::{Certify, ConstRing, Depth, Difference, Field, QAlgebra, Ring};
use crate::scalar::{format_terms, ScalarQ};

/// Polynomials in `t` with coefficients in Z[q].
type Zqt = Poly<Poly<BigInt>>;

/// Reduced fraction of polynomials in Z[q][t]: coprime in Z[q, t], and the
/// leading coefficient (in `t`, then in `q`) of the denominator is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Zqt,
    den: Zqt,
}

fn zq_one() -> Poly<BigInt> {
    Poly::one()
}

impl RatFunc {
    /// `None` when the denominator is zero.
    pub fn from_polys(num: Zqt, den: Zqt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::canonical(num, den))
    }

    fn canonical(num: Zqt, den: Zqt) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            let g = zx_gcd(&num.content_zx(), &den.coeff(0));
            (num.div_coeffs_exact(&g), den.div_coeffs_exact(&g))
        } else if let Some(quot) = num.try_exact_div_zx(&den) {
            (quot, Poly::one())
        } else {
            let g = num.gcd_zx(&den);
            if g.is_constant() {
                let c = g.coeff(0);
                (num.div_coeffs_exact(&c), den.div_coeffs_exact(&c))
            } else {
                (
                    num.try_exact_div_zx(&g).expect("gcd divides numerator"),
                    den.try_exact_div_zx(&g).expect("gcd divides denominator"),
                )
            }
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: Zqt, den: Zqt) -> Self {
        if den.leading().and_then(|c| c.leading()).is_some_and(|l| l.is_negative()) {
            RatFunc { num: -&num, den: -&den }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(ScalarQ::one())
    }

    pub fn t() -> Self {
        RatFunc {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: Poly::constant(c.numerator().clone()),
            den: Poly::constant(c.denominator().clone()),
        }
    }

    /// Polynomial in `t` with the given coefficients, constant term first.
    pub fn poly(coeffs: Vec<ScalarQ>) -> Self {
        let mut acc = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            acc = &acc + &(&Self::constant(c) * &Self::t_pow(k as i64));
        }
        acc
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let mono = Poly::monomial(zq_one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFunc {
                num: mono,
                den: Poly::one(),
            }
        } else {
            RatFunc {
                num: Poly::one(),
                den: mono,
            }
        }
    }

    pub fn numerator(&self) -> &Zqt {
        &self.num
    }

    pub fn denominator(&self) -> &Zqt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    /// The scalar value when the function does not depend on `t`.
    pub fn as_constant(&self) -> Option<ScalarQ> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(ScalarQ::from_polys(self.num.coeff(0), self.den.coeff(0)).expect("nonzero"))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn powi(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self * &Self::constant(c.clone())
    }

    /// `σ(a)(t) = a(qt)`.
    pub fn sigma(&self) -> Self {
        self.sigma_pow(1)
    }

    /// `σ^n` for any integer `n`; `n < 0` gives powers of `σ^{-1}`.
    pub fn sigma_pow(&self, n: i64) -> Self {
        if n == 0 || self.is_zero() {
            return self.clone();
        }
        // t -> q^n t is an automorphism over Z[q, 1/q], so only a power of q
        // can become a common factor.
        let base = if n < 0 {
            let d = self.num.coeffs().len().max(self.den.coeffs().len()) as i64 - 1;
            -n * d
        } else {
            0
        };
        let num = self.num.twist_inner(n, base);
        let den = self.den.twist_inner(n, base);
        let v = num
            .inner_valuation()
            .unwrap_or(0)
            .min(den.inner_valuation().unwrap_or(0));
        RatFunc {
            num: num.strip_inner(v),
            den: den.strip_inner(v),
        }
    }

    /// Formal derivative `d/dt`.
    pub fn ddt(&self) -> Self {
        if self.den.is_constant() {
            return Self::canonical(self.num.derivative(), self.den.clone());
        }
        // with g = gcd(d, d') and h = d/g: (p/d)' = (p' h - p d'/g) / (d h)
        let dd = self.den.derivative();
        let g = self.den.gcd_zx(&dd);
        let h = self.den.try_exact_div_zx(&g).expect("gcd divides denominator");
        let dg = dd.try_exact_div_zx(&g).expect("gcd divides derivative");
        let top = &(&self.num.derivative() * &h) - &(&self.num * &dg);
        Self::canonical(top, &self.den * &h)
    }

    /// Printed form with `var` in place of `t`.
    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_constant() {
            let d = self.den.coeff(0);
            let coeffs: Vec<ScalarQ> = self
                .num
                .coeffs()
                .iter()
                .map(|c| ScalarQ::from_polys(c.clone(), d.clone()).expect("nonzero"))
                .collect();
            return format_poly(&coeffs, var);
        }
        let lift = |p: &Zqt| -> Vec<ScalarQ> {
            p.coeffs()
                .iter()
                .map(|c| ScalarQ::from_polys(c.clone(), zq_one()).unwrap())
                .collect()
        };
        let (num, den) = (lift(&self.num), lift(&self.den));
        let ns = format_poly(&num, var);
        let ds = format_poly(&den, var);
        let ns = if is_single_factor(&num) { ns } else { format!("({ns})") };
        let ds = if is_single_factor(&den) { ds } else { format!("({ds})") };
        format!("{ns}/{ds}")
    }
}

fn is_single_factor(p: &[ScalarQ]) -> bool {
    let terms: Vec<_> = p.iter().filter(|c| !c.is_zero()).collect();
    terms.len() == 1 && (p.len() == 1 && terms[0].is_atomic() || terms[0].is_one())
}

fn format_poly(p: &[ScalarQ], var: &str) -> String {
    format_terms(p.iter().enumerate().rev().map(|(k, c)| {
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        (c, mono)
    }))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<ScalarQ> for RatFunc {
    fn from(c: ScalarQ) -> Self {
        RatFunc::constant(c)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        // b = g b', d = g d': the sum is (a d' + c b') / (g b' d') and only
        // a factor of g can cancel.
        let g = self.den.gcd_zx(&rhs.den);
        let b1 = self.den.try_exact_div_zx(&g).unwrap();
        let d1 = rhs.den.try_exact_div_zx(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = num.gcd_zx(&g);
        let num = num.try_exact_div_zx(&h).unwrap();
        let g = g.try_exact_div_zx(&h).unwrap();
        RatFunc::fix_sign(num, &(&g * &b1) * &d1)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let cancel = |n: &Zqt, d: &Zqt| -> (Zqt, Zqt) {
            if d.is_one_poly() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd_zx(d);
            if g.is_one_poly() {
                (n.clone(), d.clone())
            } else {
                (n.try_exact_div_zx(&g).unwrap(), d.try_exact_div_zx(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::fix_sign(&a * &c, &b * &d)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in K(t)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                $tr::$f(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl ConstRing for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(ScalarQ::from_int(n))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl QAlgebra for RatFunc {
    fn scale(&self, c: &ScalarQ) -> Self {
        RatFunc::scale(self, c)
    }
}

impl Difference for RatFunc {
    fn sigma(&self) -> Self {
        RatFunc::sigma(self)
    }

    fn sigma_pow(&self, n: usize) -> Self {
        RatFunc::sigma_pow(self, n as i64)
    }
}

impl Certify for RatFunc {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        (self == other, Depth::exact())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RatFunc {
        RatFunc::t()
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::from_i64(n)
    }

    #[test]
    fn sigma_substitutes_qt() {
        assert_eq!(t().sigma(), RatFunc::constant(ScalarQ::q()) * t());
        assert_eq!(c(5).sigma(), c(5));
        let a = c(1) / (t() - c(1));
        let expected = c(1) / (RatFunc::constant(ScalarQ::q()) * t() - c(1));
        assert_eq!(a.sigma(), expected);
        assert_eq!(a.sigma().sigma_pow(-1), a);
    }

    #[test]
    fn derivative_quotient_rule() {
        assert_eq!((t() * t()).ddt(), c(2) * t());
        assert_eq!(c(3).ddt(), RatFunc::zero());
        assert_eq!(RatFunc::t_pow(-1).ddt(), -RatFunc::t_pow(-2));
    }

    #[test]
    fn fractions_reduce() {
        let a = (t() * t() - c(1)) / (t() - c(1));
        assert_eq!(a, t() + c(1));
        assert!(a.denominator().is_constant());
        let b = (c(2) * t()) / (c(4) * t() * t());
        assert_eq!(b, RatFunc::constant(ScalarQ::from_int(1) / ScalarQ::from_int(2)) / t());
    }

    #[test]
    fn printing() {
        assert_eq!(t().sigma().to_string(), "q*t");
        let a = (t() * t() + c(1)) / (t() - c(2));
        assert_eq!(a.to_string(), "(t^2 + 1)/(t - 2)");
        let b = RatFunc::constant(ScalarQ::q() + ScalarQ::one()) * t();
        assert_eq!(b.to_string(), "(q + 1)*t");
        assert_eq!(RatFunc::t_pow(-2).to_string(), "1/t^2");
        assert_eq!((-t()).display_in("y"), "-y");
    }
}
