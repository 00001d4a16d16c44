use std::fmt;

use crate::ring::{Certify, Depth, Difference, QAlgebra, Ring};
use crate::scalar::ScalarQ;

/// `Σ_{k<order} c_k W^k` in a central variable, truncated at `order`.
#[derive(Clone)]
pub struct TaylorPoly<R> {
    coeffs: Vec<R>,
    proto: R,
    var: &'static str,
}

impl<R: Ring> TaylorPoly<R> {
    pub fn from_coeffs(proto: &R, coeffs: Vec<R>, var: &'static str) -> Self {
        TaylorPoly {
            coeffs,
            proto: proto.zero_like(),
            var,
        }
    }

    /// `c + 0 W + ...` at the given order.
    pub fn constant(c: R, order: usize, var: &'static str) -> Self {
        let proto = c.zero_like();
        let mut coeffs = vec![proto.clone(); order];
        if order > 0 {
            coeffs[0] = c;
        }
        TaylorPoly { coeffs, proto, var }
    }

    /// The variable itself.
    pub fn var(proto: &R, order: usize, var: &'static str) -> Self {
        let mut coeffs = vec![proto.zero_like(); order];
        if order > 1 {
            coeffs[1] = proto.one_like();
        }
        Self::from_coeffs(proto, coeffs, var)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.proto.clone())
    }

    pub fn var_name(&self) -> &'static str {
        self.var
    }

    pub fn truncate(&self, order: usize) -> Self {
        TaylorPoly {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
            proto: self.proto.clone(),
            var: self.var,
        }
    }

    pub fn map<S: Ring>(&self, proto: &S, f: impl Fn(&R) -> S) -> TaylorPoly<S> {
        TaylorPoly::from_coeffs(proto, self.coeffs.iter().map(f).collect(), self.var)
    }

    /// `d/dW`; the order drops by one.
    pub fn derivative(&self) -> Self
    where
        R: QAlgebra,
    {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&ScalarQ::from_int(k as i64)))
            .collect();
        TaylorPoly {
            coeffs,
            proto: self.proto.clone(),
            var: self.var,
        }
    }
}

impl<R: Ring> PartialEq for TaylorPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for TaylorPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()?;
        write!(f, " in {}", self.var)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TaylorPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = series_terms(self.coeffs.iter(), self.var);
        f.write_str(&terms)
    }
}

/// `a0 + V*(a1) + V^2*(a2) + ...`, skipping zero coefficients.
pub(crate) fn series_terms<'a, R: Ring + fmt::Display + 'a>(
    coeffs: impl Iterator<Item = &'a R>,
    var: &str,
) -> String {
    let terms: Vec<String> = coeffs
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => format!("{c:#}"),
            1 => format!("{var}*({c:#})"),
            _ => format!("{var}^{k}*({c:#})"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl<R: Ring> Ring for TaylorPoly<R> {
    fn zero_like(&self) -> Self {
        TaylorPoly {
            coeffs: vec![self.proto.clone(); self.order()],
            proto: self.proto.clone(),
            var: self.var,
        }
    }
    fn one_like(&self) -> Self {
        Self::constant(self.proto.one_like(), self.order(), self.var)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        TaylorPoly {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.plus(b)).collect(),
            proto: self.proto.clone(),
            var: self.var,
        }
    }
    fn negate(&self) -> Self {
        TaylorPoly {
            coeffs: self.coeffs.iter().map(Ring::negate).collect(),
            proto: self.proto.clone(),
            var: self.var,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..n)
            .map(|l| {
                (0..=l).fold(self.proto.clone(), |acc, i| {
                    acc.plus(&self.coeffs[i].times(&rhs.coeffs[l - i]))
                })
            })
            .collect();
        TaylorPoly {
            coeffs,
            proto: self.proto.clone(),
            var: self.var,
        }
    }
}

impl<R: QAlgebra> QAlgebra for TaylorPoly<R> {
    fn scale(&self, c: &ScalarQ) -> Self {
        self.map(&self.proto, |x| x.scale(c))
    }
}

/// Coefficientwise `σ`; the variable is fixed.
impl<R: Difference> Difference for TaylorPoly<R> {
    fn sigma(&self) -> Self {
        self.map(&self.proto, |x| x.sigma())
    }
}

impl<R: Certify> Certify for TaylorPoly<R> {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        let mut depth = Depth {
            taylor_order: Some(self.order().min(other.order())),
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;

    fn c(n: i64) -> RatFunc {
        RatFunc::from(ScalarQ::from_int(n))
    }

    #[test]
    fn product_truncates() {
        let w = TaylorPoly::var(&RatFunc::zero(), 3, "W");
        let one_plus_w = w.plus(&w.one_like());
        let sq = one_plus_w.times(&one_plus_w);
        assert_eq!(sq.coeffs(), &[c(1), c(2), c(1)]);
        let cube = sq.times(&one_plus_w);
        assert_eq!(cube.coeffs(), &[c(1), c(3), c(3)]);
    }

    #[test]
    fn derivative_lowers_order() {
        let p = TaylorPoly::from_coeffs(&RatFunc::zero(), vec![c(5), c(1), c(1)], "W");
        let d = p.derivative();
        assert_eq!(d.order(), 2);
        assert_eq!(d.coeffs(), &[c(1), c(2)]);
        assert!(TaylorPoly::constant(c(7), 4, "W").derivative().is_zero());
    }

    #[test]
    fn printing() {
        let p = TaylorPoly::from_coeffs(&RatFunc::zero(), vec![RatFunc::t(), RatFunc::one()], "W");
        assert_eq!(p.to_string(), "t + W*(1)");
    }
}
