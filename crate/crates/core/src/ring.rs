//! Ring abstractions shared by every coefficient type in the crate.
//!
//! Constants are obtained from an existing element (`zero_like`, `one_like`)
//! because some rings carry context: a noncommutative test algebra needs its
//! presentation, a sequence window needs its length.

use std::fmt::Debug;

use serde::Serialize;

use crate::scalar::ScalarQ;

/// An associative unital ring, not necessarily commutative.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, rhs: &Self) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

/// Rings whose constants do not depend on context.
pub trait ConstRing: Ring {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
}

pub trait Field: ConstRing {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.times(&r))
    }
}

/// Algebras over the scalar field Q(q).
pub trait QAlgebra: Ring {
    fn scale(&self, c: &ScalarQ) -> Self;
}

/// A ring together with a distinguished endomorphism.
pub trait Difference: QAlgebra {
    fn sigma(&self) -> Self;

    fn sigma_pow(&self, n: usize) -> Self {
        let mut acc = self.clone();
        for _ in 0..n {
            acc = acc.sigma();
        }
        acc
    }
}

/// Depth at which an equality between truncated objects was certified.
/// `None` in a slot means the corresponding structure was not involved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Depth {
    pub series_order: Option<usize>,
    pub window: Option<usize>,
    pub taylor_order: Option<usize>,
}

fn meet_slot(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Depth {
    pub fn exact() -> Self {
        Depth::default()
    }

    pub fn meet(self, other: Depth) -> Depth {
        Depth {
            series_order: meet_slot(self.series_order, other.series_order),
            window: meet_slot(self.window, other.window),
            taylor_order: meet_slot(self.taylor_order, other.taylor_order),
        }
    }

    /// True when some truncation left nothing to compare.
    pub fn is_vacuous(&self) -> bool {
        [self.series_order, self.window, self.taylor_order].contains(&Some(0))
    }
}

impl std::fmt::Display for Depth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.series_order {
            parts.push(format!("N={n}"));
        }
        if let Some(m) = self.window {
            parts.push(format!("M={m}"));
        }
        if let Some(w) = self.taylor_order {
            parts.push(format!("W={w}"));
        }
        if parts.is_empty() {
            f.write_str("exact")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Equality on the common truncation of two values.
pub trait Certify: Ring {
    /// Returns whether the values agree wherever both are defined, and the
    /// depth of that comparison.
    fn agree(&self, other: &Self) -> (bool, Depth);
}

mod bigint_impls {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    use super::{Certify, ConstRing, Depth, Field, Ring};

    impl Ring for BigInt {
        fn zero_like(&self) -> Self {
            <BigInt as Zero>::zero()
        }
        fn one_like(&self) -> Self {
            <BigInt as One>::one()
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
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

    impl ConstRing for BigInt {
        fn zero() -> Self {
            <BigInt as Zero>::zero()
        }
        fn one() -> Self {
            <BigInt as One>::one()
        }
        fn from_i64(n: i64) -> Self {
            BigInt::from(n)
        }
    }

    impl Ring for BigRational {
        fn zero_like(&self) -> Self {
            <BigRational as Zero>::zero()
        }
        fn one_like(&self) -> Self {
            <BigRational as One>::one()
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
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

    impl ConstRing for BigRational {
        fn zero() -> Self {
            <BigRational as Zero>::zero()
        }
        fn one() -> Self {
            <BigRational as One>::one()
        }
        fn from_i64(n: i64) -> Self {
            BigRational::from_integer(BigInt::from(n))
        }
    }

    impl Field for BigRational {
        fn inv(&self) -> Option<Self> {
            if Zero::is_zero(self) {
                None
            } else {
                Some(self.recip())
            }
        }
    }

    impl Certify for BigRational {
        fn agree(&self, other: &Self) -> (bool, Depth) {
            (self == other, Depth::exact())
        }
    }
}
