//! Exact arithmetic in the field Q(q) of rational functions in an
//! indeterminate `q`.
//!
//! A [`ScalarQ`] is stored as a reduced fraction of integer polynomials:
//! numerator and denominator are coprime, their joint content is 1 and the
//! denominator has a positive leading coefficient. Two values are equal iff
//! their stored fractions are identical.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("denominator vanishes at q = {at}")]
    PoleAtPoint { at: BigRational },
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: Poly<BigInt>,
    den: Poly<BigInt>,
}

impl ScalarQ {
    /// Builds `num / den` in canonical form.
    pub fn from_polys(num: Poly<BigInt>, den: Poly<BigInt>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly<BigInt>, den: Poly<BigInt>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else if let Some(quot) = num.try_exact_div(&den) {
            (quot, Poly::one())
        } else {
            let g = num.gcd_primitive(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.try_exact_div(&g).expect("gcd divides numerator"),
                    den.try_exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        ScalarQ { num, den }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        ScalarQ {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        ScalarQ {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ScalarQ {
            num: Poly::constant(n),
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::canonical(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = Poly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            ScalarQ {
                num: mono,
                den: Poly::one(),
            }
        } else {
            ScalarQ {
                num: Poly::one(),
                den: mono,
            }
        }
    }

    /// Polynomial in `q` with the given integer coefficients (constant term first).
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_polys(
            Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect()),
            Poly::one(),
        )
        .expect("unit denominator")
    }

    pub fn numerator(&self) -> &Poly<BigInt> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<BigInt> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant() && self.den.coeff(0).is_one()
    }

    /// Integer value when the scalar is a constant integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_polynomial() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Rational value when the scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let inv = rhs.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Result<Self, ScalarError> {
        let base = if exp < 0 {
            self.inv().ok_or(ScalarError::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `q := at` after reduction.
    pub fn eval_at(&self, at: &BigRational) -> Result<BigRational, ScalarError> {
        let num = eval_int_poly(&self.num, at);
        let den = eval_int_poly(&self.den, at);
        if den.is_zero() {
            return Err(ScalarError::PoleAtPoint { at: at.clone() });
        }
        Ok(num / den)
    }

    /// Substitutes `q := s` for another element of Q(q).
    pub fn substitute(&self, s: &ScalarQ) -> Result<ScalarQ, ScalarError> {
        let lift = |p: &Poly<BigInt>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(ScalarQ::zero(), |acc, c| &(&acc * s) + &ScalarQ::from_bigint(c.clone()))
        };
        lift(&self.num).checked_div(&lift(&self.den))
    }
}

fn eval_int_poly(p: &Poly<BigInt>, at: &BigRational) -> BigRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * at + BigRational::from_integer(c.clone()))
}

impl Default for ScalarQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ScalarQ {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_constant() && self.den.coeff(0).is_one() {
                return ScalarQ {
                    num: &self.num + &rhs.num,
                    den: self.den.clone(),
                };
            }
            return ScalarQ::canonical(&self.num + &rhs.num, self.den.clone());
        }
        ScalarQ::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return ScalarQ {
                num: &self.num * &rhs.num,
                den: Poly::one(),
            };
        }
        ScalarQ::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`ScalarQ::checked_div`] otherwise.
impl Div for &ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for ScalarQ {
            type Output = ScalarQ;
            fn $f(self, rhs: ScalarQ) -> ScalarQ {
                $tr::$f(&self, &rhs)
            }
        }
        impl $tr<&ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $f(self, rhs: &ScalarQ) -> ScalarQ {
                $tr::$f(&self, rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl ring::Ring for ScalarQ {
    fn zero_like(&self) -> Self {
        ScalarQ::zero()
    }
    fn one_like(&self) -> Self {
        ScalarQ::one()
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

impl ring::ConstRing for ScalarQ {
    fn zero() -> Self {
        ScalarQ::zero()
    }
    fn one() -> Self {
        ScalarQ::one()
    }
    fn from_i64(n: i64) -> Self {
        ScalarQ::from_int(n)
    }
}

impl ring::Field for ScalarQ {
    fn inv(&self) -> Option<Self> {
        ScalarQ::inv(self)
    }
}

impl ring::Certify for ScalarQ {
    fn agree(&self, other: &Self) -> (bool, ring::Depth) {
        (self == other, ring::Depth::exact())
    }
}

impl ring::QAlgebra for ScalarQ {
    fn scale(&self, c: &ScalarQ) -> Self {
        self * c
    }
}

/// Formats an integer polynomial in `var` with terms in decreasing degree.
pub(crate) fn format_int_poly(p: &Poly<BigInt>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

fn is_bare_monomial(p: &Poly<BigInt>) -> bool {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    nonzero == 1 && (p.leading().is_some_and(|c| c.is_one()) || p.is_constant())
}

impl ScalarQ {
    /// True when the printed form is a single term (safe as a factor).
    pub fn is_atomic(&self) -> bool {
        self.is_polynomial()
            && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && !self.num.leading().is_some_and(|c| c.is_negative())
    }
}

/// Joins `coefficient * monomial` terms into a sum; an empty monomial
/// stands for the unit. Coefficients that are not a single positive term
/// are parenthesized.
pub(crate) fn format_terms<'a>(terms: impl IntoIterator<Item = (&'a ScalarQ, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = -c;
        let (negative, mag) = if neg.is_atomic() && !c.is_atomic() {
            (true, neg)
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coef = if mag.is_atomic() {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        if mono.is_empty() {
            out.push_str(&coef);
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{coef}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_int_poly(&self.num, "q");
        if self.is_polynomial() {
            return f.write_str(&num);
        }
        let num_terms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        let den = format_int_poly(&self.den, "q");
        let num = if num_terms > 1 { format!("({num})") } else { num };
        let den = if is_bare_monomial(&self.den) {
            den
        } else {
            format!("({den})")
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
