//! Dense univariate polynomials over a ring with context-free constants.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{ConstRing, Field, Ring};

/// Little-endian coefficient vector with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: ConstRing> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitutes `x := c * x`.
    pub fn rescale_var(&self, c: &R) -> Self {
        let mut factor = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.times(&factor));
            factor = factor.times(c);
        }
        Self::from_coeffs(out)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.times(&R::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc.times(at).plus(a))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn map<S: ConstRing>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<R: ConstRing> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect())
    }
}

impl<R: ConstRing> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect())
    }
}

impl<R: ConstRing> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.negate()).collect())
    }
}

impl<R: ConstRing> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead_inv = divisor.leading()?.inv()?;
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&c.times(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl Poly<BigInt> {
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(<BigInt as Zero>::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn div_scalar(&self, c: &BigInt) -> Self {
        if One::is_one(c) {
            return self.clone();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Pseudo-remainder `lc(b)^k * a mod b`, up to a constant factor.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.coeffs.len() - 1;
        let lb = b.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            let g = lr.gcd(&lb);
            let (fa, fb) = (&lb / &g, &lr / &g);
            for c in r.iter_mut() {
                *c *= &fa;
            }
            for (j, c) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &fb * c;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly::from_coeffs(r)
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd_primitive(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Quotient when `divisor` divides `self` exactly in Z[x].
    pub fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.leading()?;
        let d = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.coeffs.len() <= d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![<BigInt as Zero>::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d];
            if Zero::is_zero(top) {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !Zero::is_zero(&r) {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Poly::from_coeffs(quot))
        } else {
            None
        }
    }
}

impl<R: ConstRing> Ring for Poly<R> {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
}

impl<R: ConstRing> ConstRing for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
}

const MOD_P: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= MOD_P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % MOD_P;
        }
        b = b * b % MOD_P;
        e >>= 1;
    }
    acc
}

/// Degree of the gcd of two polynomials over F_p, coefficients low first.
fn gcd_degree_mod_p(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), MOD_P - 2);
        while a.len() >= b.len() {
            let f = a.last().unwrap() * inv % MOD_P;
            let shift = a.len() - b.len();
            for (j, &c) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + MOD_P - f * c % MOD_P) % MOD_P;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Greatest common divisor in Z[x] with positive leading coefficient;
/// `gcd(0, 0) = 0`.
pub fn zx_gcd(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    if a.is_zero() {
        return b.sign_normalized();
    }
    if b.is_zero() {
        return a.sign_normalized();
    }
    let c = a.content().gcd(&b.content());
    a.gcd_primitive(b).scale(&c)
}

impl Poly<BigInt> {
    fn sign_normalized(&self) -> Self {
        if self.leading().is_some_and(|l| l.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    fn is_unit_one(&self) -> bool {
        self.coeffs.len() == 1 && One::is_one(&self.coeffs[0])
    }
}

/// Polynomials in an outer variable over Z[x]; used for Z[q][t].
impl Poly<Poly<BigInt>> {
    pub fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_unit_one()
    }

    /// Gcd of all coefficients, with positive leading coefficient.
    pub fn content_zx(&self) -> Poly<BigInt> {
        let mut g = Poly::zero();
        for c in &self.coeffs {
            g = zx_gcd(&g, c);
            if g.is_unit_one() {
                break;
            }
        }
        g
    }

    pub fn div_coeffs_exact(&self, c: &Poly<BigInt>) -> Self {
        if c.is_unit_one() {
            return self.clone();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| a.try_exact_div(c).expect("content divides every coefficient"))
                .collect(),
        )
    }

    /// Divides out the content and makes the leading coefficient's leading
    /// coefficient positive.
    pub fn primitive_zx(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content_zx();
        if self.leading().unwrap().leading().is_some_and(|l| l.is_negative()) {
            c = -&c;
        }
        self.div_coeffs_exact(&c)
    }

    fn pseudo_rem_zx(&self, b: &Self) -> Self {
        let db = b.coeffs.len() - 1;
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.coeffs.len() > db {
            let lr = r.leading().unwrap().clone();
            let shift = r.coeffs.len() - 1 - db;
            let g = zx_gcd(&lr, &lb);
            let fa = lb.try_exact_div(&g).unwrap();
            let fb = lr.try_exact_div(&g).unwrap();
            r = &r.scale(&fa) - &b.scale(&fb).shift_up(shift);
        }
        r
    }

    /// Greatest common divisor in Z[x][y], normalized as in
    /// [`Poly::primitive_zx`] times the content gcd.
    pub fn gcd_zx(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_zx().scale(&other.content_zx());
        }
        if other.is_zero() {
            return self.primitive_zx().scale(&self.content_zx());
        }
        let c = zx_gcd(&self.content_zx(), &other.content_zx());
        if self.is_constant() || other.is_constant() || self.coprime_in_y(other) {
            return Poly::constant(c);
        }
        let (mut a, mut b) = (self.primitive_zx(), other.primitive_zx());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return Poly::constant(c);
            }
            let r = a.pseudo_rem_zx(&b);
            a = b;
            b = r.primitive_zx();
        }
        a.primitive_zx().scale(&c)
    }

    /// Image under `x -> x0` and reduction mod [`MOD_P`], as coefficients in `y`.
    fn image_mod_p(&self, x0: u64) -> Vec<u64> {
        let p = BigInt::from(MOD_P);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let mut acc = 0u64;
                for k in c.coeffs().iter().rev() {
                    let r = ((k % &p) + &p) % &p;
                    let r: u64 = r.try_into().expect("reduced below the modulus");
                    acc = (acc * x0 + r) % MOD_P;
                }
                acc
            })
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Sufficient test for a gcd of degree 0 in `y`: a common factor of
    /// positive degree survives any specialization that keeps the leading
    /// coefficient of one operand nonzero.
    fn coprime_in_y(&self, other: &Self) -> bool {
        for x0 in [48_271u64, 1_234_567] {
            let (a, b) = (self.image_mod_p(x0), other.image_mod_p(x0));
            if a.len() == self.coeffs.len() || b.len() == other.coeffs.len() {
                return gcd_degree_mod_p(a, b) == 0;
            }
        }
        false
    }

    /// Quotient when `divisor` divides `self` exactly in Z[x][y].
    pub fn try_exact_div_zx(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.leading()?;
        let d = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.coeffs.len() <= d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Poly::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            if rem[k + d].is_zero() {
                continue;
            }
            let c = rem[k + d].try_exact_div(lead)?;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Largest `v` with `x^v` dividing every coefficient.
    pub fn inner_valuation(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.valuation()).min()
    }

    /// Multiplies the coefficient of `y^k` by `x^(a*k + b)`; requires
    /// `a*k + b >= 0` for every `k` in range.
    pub fn twist_inner(&self, a: i64, b: i64) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let e = a * k as i64 + b;
                    assert!(e >= 0, "negative inner exponent");
                    c.shift_up(e as usize)
                })
                .collect(),
        )
    }

    /// Divides every coefficient by `x^v`.
    pub fn strip_inner(&self, v: usize) -> Self {
        if v == 0 {
            return self.clone();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Poly::from_coeffs(c.coeffs.iter().skip(v).cloned().collect()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn zp(c: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(zp(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(zp(&[0, 0]).is_zero());
    }

    #[test]
    fn integer_gcd_is_primitive() {
        // (x - 1)(x + 2) and 2(x - 1)(x + 3)
        let a = &zp(&[-1, 1]) * &zp(&[2, 1]);
        let b = &(&zp(&[-1, 1]) * &zp(&[3, 1])).scale(&BigInt::from(2)) * &Poly::one();
        assert_eq!(a.gcd_primitive(&b), zp(&[-1, 1]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = &zp(&[1, 1]) * &zp(&[1, 0, 1]);
        assert_eq!(a.try_exact_div(&zp(&[1, 1])), Some(zp(&[1, 0, 1])));
        assert_eq!(a.try_exact_div(&zp(&[2, 1])), None);
    }

    #[test]
    fn rational_division_round_trips() {
        let a: Poly<BigRational> = zp(&[3, 0, 2, 5]).map(|c| BigRational::from_integer(c.clone()));
        let b: Poly<BigRational> = zp(&[1, 7]).map(|c| BigRational::from_integer(c.clone()));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn derivative_and_rescale() {
        assert_eq!(zp(&[5, 3, 4]).derivative(), zp(&[3, 8]));
        assert_eq!(zp(&[1, 1, 1]).rescale_var(&BigInt::from(2)), zp(&[1, 2, 4]));
    }

    fn zxy(rows: &[&[i64]]) -> Poly<Poly<BigInt>> {
        Poly::from_coeffs(rows.iter().map(|r| zp(r)).collect())
    }

    #[test]
    fn bivariate_gcd() {
        // (y + x)(y - 1) and (y + x)(x*y + 2)
        let common = zxy(&[&[0, 1], &[1]]);
        let a = &common * &zxy(&[&[-1], &[1]]);
        let b = &common * &zxy(&[&[2], &[0, 1]]);
        assert_eq!(a.gcd_zx(&b), common);
        assert_eq!(a.try_exact_div_zx(&common), Some(zxy(&[&[-1], &[1]])));
        assert_eq!(a.try_exact_div_zx(&zxy(&[&[2], &[0, 1]])), None);
    }

    #[test]
    fn bivariate_gcd_with_contents() {
        // 2x(y + 1) and 4x^2(y + 1)(y - 1)
        let a = zxy(&[&[0, 2], &[0, 2]]);
        let b = &zxy(&[&[0, 0, 4], &[0, 0, 4]]) * &zxy(&[&[-1], &[1]]);
        assert_eq!(a.gcd_zx(&b), zxy(&[&[0, 2], &[0, 2]]));
        assert_eq!(a.inner_valuation(), Some(1));
    }
}
