//! Gauss hypergeometric and Heine basic hypergeometric series, their
//! equations checked coefficientwise, and the `q -> 1` degeneration.
//!
//! The q-difference operator is written in a variable `x`; it acts on the
//! same series as the one in `z`, so a single variable `z` is used. The
//! differential equation is printed with `γ` in place of `c`; it is read
//! with `γ = c`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::qcomb::qsym;
use crate::report::{Check, CheckAccumulator, Report};
use crate::scalar::ScalarQ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QhyperError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A truncated power series `c_0 + c_1 z + ... + c_(N-1) z^(N-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeriesZ<C> {
    coeffs: Vec<C>,
}

impl<C: Clone> PowerSeriesZ<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        PowerSeriesZ { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    /// A copy with `c_n` replaced.
    pub fn with_coeff(&self, n: usize, c: C) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[n] = c;
        PowerSeriesZ { coeffs }
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> PowerSeriesZ<D> {
        PowerSeriesZ {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: fmt::Display + IsZero> fmt::Display for PowerSeriesZ<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_coeff() {
                continue;
            }
            parts.push(match n {
                0 => format!("{c}"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{n}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(z^{})", parts.join(" + "), self.coeffs.len())
    }
}

#[doc(hidden)]
pub trait IsZero {
    fn is_zero_coeff(&self) -> bool;
}

impl IsZero for BigRational {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for ScalarQ {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

/// `[θ + α]*_q = (q^α T - q^-α T^-1) / (q - q^-1)` with `T: z -> qz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThetaOperator {
    pub offset: i64,
}

impl ThetaOperator {
    pub fn new(offset: i64) -> Self {
        ThetaOperator { offset }
    }

    /// The operator applied literally to `z^n`, returned as the factor in
    /// front of `z^n`.
    pub fn apply_to_monomial(&self, n: i64) -> ScalarQ {
        let a = self.offset;
        let t = ScalarQ::q_pow(n);
        let tinv = ScalarQ::q_pow(-n);
        let num = &(&ScalarQ::q_pow(a) * &t) - &(&ScalarQ::q_pow(-a) * &tinv);
        &num / &(&ScalarQ::q() - &ScalarQ::q_pow(-1))
    }

    /// The diagonal value `[n + α]*_q`.
    pub fn eigenvalue(&self, n: i64) -> ScalarQ {
        qsym(n + self.offset)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `F(a, b, c; z)` to order `n`.
pub fn hypergeom(a: &BigRational, b: &BigRational, c: &BigRational, n: usize) -> Result<PowerSeriesZ<BigRational>, QhyperError> {
    if c.is_integer() && *c <= BigRational::zero() {
        return Err(QhyperError::BadParameter(format!("c = {c} is a non-positive integer")));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut cur = BigRational::one();
    for k in 0..n {
        coeffs.push(cur.clone());
        let kk = rat(k as i64);
        cur = cur * (a + &kk) * (b + &kk) / ((c + &kk) * (&kk + BigRational::one()));
    }
    Ok(PowerSeriesZ { coeffs })
}

/// Heine's `φ(α, β, γ; z)` to order `n`.
pub fn heine(alpha: i64, beta: i64, gamma: i64, n: usize) -> Result<PowerSeriesZ<ScalarQ>, QhyperError> {
    if gamma < 1 {
        return Err(QhyperError::BadParameter(format!("γ = {gamma} must be at least 1")));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut cur = ScalarQ::one();
    for k in 0..n as i64 {
        coeffs.push(cur.clone());
        let num = &qsym(k + alpha) * &qsym(k + beta);
        let den = &qsym(k + 1) * &qsym(k + gamma);
        cur = &cur * &(&num / &den);
    }
    Ok(PowerSeriesZ { coeffs })
}

/// Coefficients of `z^0 .. z^(N-3)` of
/// `z(1-z) y'' - ((a+b+1) z - c) y' - ab y` for the truncated `y`.
pub fn ode_residual(y: &PowerSeriesZ<BigRational>, a: &BigRational, b: &BigRational, c: &BigRational) -> Vec<BigRational> {
    let cs = y.coeffs();
    let s = a + b + BigRational::one();
    let ab = a * b;
    (0..cs.len().saturating_sub(2))
        .map(|n| {
            let nn = rat(n as i64);
            let n1 = rat(n as i64 + 1);
            // z y'' contributes (n+1) n c_(n+1); -z^2 y'' contributes -n(n-1) c_n;
            // c y' contributes c (n+1) c_(n+1); -(a+b+1) z y' contributes -(a+b+1) n c_n
            let up = (&n1 * &nn + c * &n1) * &cs[n + 1];
            let down = (&nn * (&nn - BigRational::one()) + &s * &nn + &ab) * &cs[n];
            up - down
        })
        .collect()
}

/// `c_(n+1) [n+1]* [n+γ]* - c_n [n+α]* [n+β]*` for `n < N-1`.
pub fn heine_recurrence_residual(phi: &PowerSeriesZ<ScalarQ>, alpha: i64, beta: i64, gamma: i64) -> Vec<ScalarQ> {
    let cs = phi.coeffs();
    let (ta, tb, tg) = (ThetaOperator::new(alpha), ThetaOperator::new(beta), ThetaOperator::new(gamma - 1));
    let theta = ThetaOperator::new(0);
    (0..cs.len().saturating_sub(1))
        .map(|n| {
            let k = n as i64;
            // x^-1 [θ]* [θ+γ-1]* sends z^(n+1) to [n+1]* [n+γ]* z^n
            let lhs = &(&cs[n + 1] * &theta.eigenvalue(k + 1)) * &tg.eigenvalue(k + 1);
            let rhs = &(&cs[n] * &ta.eigenvalue(k)) * &tb.eigenvalue(k);
            &lhs - &rhs
        })
        .collect()
}

fn fmt_params(a: impl fmt::Display, b: impl fmt::Display, c: impl fmt::Display) -> String {
    format!("({a}, {b}, {c})")
}

pub fn verify_hypergeom_ode(a: &BigRational, b: &BigRational, c: &BigRational, n: usize) -> Result<Report, QhyperError> {
    let y = hypergeom(a, b, c, n)?;
    let mut report = Report::new("hypergeom");
    report.note(format!("F(a, b, c; z) with (a, b, c) = {} to order {n}", fmt_params(a, b, c)));
    report.note("the equation's coefficient of dy/dz is read with gamma = c");
    report.extend(ode_report(&y, a, b, c));
    Ok(report)
}

/// One check per coefficient of the ODE residual.
pub fn ode_report(y: &PowerSeriesZ<BigRational>, a: &BigRational, b: &BigRational, c: &BigRational) -> Report {
    let mut report = Report::new("hypergeom");
    for (n, r) in ode_residual(y, a, b, c).into_iter().enumerate() {
        report.push(Check::from_bool(
            format!("ode-z^{n:02}"),
            format!("[z^{n}] (z(1-z)y'' - ((a+b+1)z - c)y' - ab y) = 0"),
            r.is_zero(),
            || format!("residual {r}"),
        ));
    }
    report
}

pub fn verify_heine_qdiff(alpha: i64, beta: i64, gamma: i64, n: usize) -> Result<Report, QhyperError> {
    let phi = heine(alpha, beta, gamma, n)?;
    let mut report = Report::new("heine");
    report.note(format!("phi(alpha, beta, gamma; z) with {} to order {n}", fmt_params(alpha, beta, gamma)));
    report.note("the operator's variable x is identified with z");
    report.extend(qdiff_report(&phi, alpha, beta, gamma));
    Ok(report)
}

/// One check per instance of the coefficient recurrence.
pub fn qdiff_report(phi: &PowerSeriesZ<ScalarQ>, alpha: i64, beta: i64, gamma: i64) -> Report {
    let mut report = Report::new("heine");
    for (n, r) in heine_recurrence_residual(phi, alpha, beta, gamma).into_iter().enumerate() {
        report.push(Check::from_bool(
            format!("qdiff-n={n:02}"),
            format!("c_{} [{}]* [{}]* = c_{n} [{}]* [{}]*", n + 1, n + 1, n as i64 + gamma, n as i64 + alpha, n as i64 + beta),
            r.is_zero(),
            || format!("residual {r}"),
        ));
    }
    report
}

/// The literal operator on `z^n` equals `[n+α]*_q z^n`.
pub fn verify_diagonal_action(max_n: i64, alphas: std::ops::RangeInclusive<i64>) -> Check {
    let mut acc = CheckAccumulator::new("diagonal-action", "[theta+alpha]*_q z^n = [n+alpha]*_q z^n");
    for a in alphas {
        let op = ThetaOperator::new(a);
        for n in 0..=max_n {
            acc.compare(|| format!("alpha={a}, n={n}"), &op.apply_to_monomial(n), &op.eigenvalue(n));
        }
    }
    acc.finish()
}

/// `φ(α, β, γ; z)` at `q = 1` is `F(α, β, γ; z)` coefficientwise, and no
/// coefficient has a pole at `q = 1`.
pub fn verify_degeneration(triples: &[(i64, i64, i64)], n: usize) -> Result<Check, QhyperError> {
    let mut acc = CheckAccumulator::new("degeneration", "phi(alpha, beta, gamma; z) -> F(alpha, beta, gamma; z) as q -> 1");
    let one = BigRational::one();
    for &(a, b, c) in triples {
        let phi = heine(a, b, c, n)?;
        let f = hypergeom(&rat(a), &rat(b), &rat(c), n)?;
        for (k, (p, h)) in phi.coeffs().iter().zip(f.coeffs()).enumerate() {
            match p.eval_at(&one) {
                Ok(v) => acc.require(v == *h, || format!("({a},{b},{c}) n={k}: {v} != {h}")),
                Err(e) => acc.require(false, || format!("({a},{b},{c}) n={k}: {p} has {e}")),
            }
        }
    }
    Ok(acc.finish())
}

/// The grid `1 <= α, β <= 3`, `γ in {1, 2, 3}`.
pub fn degeneration_grid() -> Vec<(i64, i64, i64)> {
    let mut g = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                g.push((a, b, c));
            }
        }
    }
    g
}

/// `c_1 = [α]* [β]* / ([γ]* [1]*)`.
pub fn verify_first_heine_coefficient(alpha: i64, beta: i64, gamma: i64) -> Result<Check, QhyperError> {
    let phi = heine(alpha, beta, gamma, 2)?;
    let expected = &(&qsym(alpha) * &qsym(beta)) / &(&qsym(gamma) * &qsym(1));
    Ok(Check::compare("first-coefficient", "c_1 = [alpha]*[beta]*/([gamma]*[1]*)", &phi.coeffs()[1], &expected))
}
