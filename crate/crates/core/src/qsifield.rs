//! qsi structures on K(t) and an axiom checker for any qsi algebra.
//!
//! A qsi algebra carries an endomorphism `σ`, a nonzero scalar `q` and
//! linear maps `θ^(i)` with
//!
//! 1. `θ^(0) = id`,
//! 2. `q^i σ θ^(i) = θ^(i) σ`,
//! 3. `θ^(l)(ab) = Σ_{m+n=l} σ^n(θ^(m)(a)) θ^(n)(b)`,
//! 4. `θ^(i) θ^(j) = C(i+j, i)_q θ^(i+j)`.
//!
//! The index placement in (3) is the one under which the universal Hopf
//! morphism is multiplicative; the seqseries tests check both against each
//! other.

use std::fmt::Display;

use thiserror::Error;

use crate::qcomb::{qbinom_at, qfact_at};
use crate::ratfunc::RatFunc;
use crate::report::{Check, CheckAccumulator, Report};
use crate::ring::{Certify, QAlgebra, Ring};
use crate::scalar::ScalarQ;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsiError {
    #[error("q*sigma(lambda) != lambda for lambda = {0}")]
    InconsistentLambda(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsiKind {
    /// `σ(t) = qt`, `θ^(i) = 0` for `i ≥ 1`.
    DifferenceTrivial,
    /// `σ = id`, `q = 1`, `θ^(i) = (d/dt)^i / i!`.
    DifferentialTrivial,
    /// `σ(t) = qt`, `θ^(1) = λ(σ - id)`, `θ^(i) = θ^(1)^i / [i]_q!`.
    QSkew,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QsiStructure {
    kind: QsiKind,
    lambda: Option<RatFunc>,
}

impl QsiStructure {
    /// `λ = 1/((q-1)t)`, so `θ^(1)(a) = (σ(a) - a)/((q-1)t)`.
    pub fn canonical() -> Self {
        let lambda = (RatFunc::constant(&ScalarQ::q() - &ScalarQ::one()) * RatFunc::t())
            .inv()
            .expect("nonzero");
        Self::q_skew_unchecked(lambda)
    }

    pub fn difference_trivial() -> Self {
        QsiStructure {
            kind: QsiKind::DifferenceTrivial,
            lambda: None,
        }
    }

    pub fn differential_trivial() -> Self {
        QsiStructure {
            kind: QsiKind::DifferentialTrivial,
            lambda: None,
        }
    }

    /// q-skew structure; requires `q σ(λ) = λ`.
    pub fn q_skew(lambda: RatFunc) -> Result<Self, QsiError> {
        if lambda.sigma().scale(&ScalarQ::q()) != lambda {
            return Err(QsiError::InconsistentLambda(lambda.to_string()));
        }
        Ok(Self::q_skew_unchecked(lambda))
    }

    /// Skips the consistency test; used to exhibit axiom failures.
    pub fn q_skew_unchecked(lambda: RatFunc) -> Self {
        QsiStructure {
            kind: QsiKind::QSkew,
            lambda: Some(lambda),
        }
    }

    pub fn kind(&self) -> QsiKind {
        self.kind
    }

    pub fn lambda(&self) -> Option<&RatFunc> {
        self.lambda.as_ref()
    }

    pub fn describe(&self) -> String {
        match self.kind {
            QsiKind::DifferenceTrivial => "difference-trivial".to_string(),
            QsiKind::DifferentialTrivial => "differential-trivial".to_string(),
            QsiKind::QSkew => format!("q-skew, lambda = {}", self.lambda.as_ref().unwrap()),
        }
    }

    pub fn q_value(&self) -> ScalarQ {
        match self.kind {
            QsiKind::DifferentialTrivial => ScalarQ::one(),
            _ => ScalarQ::q(),
        }
    }

    pub fn sigma(&self, a: &RatFunc) -> RatFunc {
        match self.kind {
            QsiKind::DifferentialTrivial => a.clone(),
            _ => a.sigma(),
        }
    }

    fn theta1(&self, a: &RatFunc) -> RatFunc {
        match self.kind {
            QsiKind::DifferenceTrivial => RatFunc::zero(),
            QsiKind::DifferentialTrivial => a.ddt(),
            QsiKind::QSkew => self.lambda.as_ref().unwrap() * &(&a.sigma() - a),
        }
    }

    /// `θ^(i)(a)`.
    pub fn theta(&self, i: usize, a: &RatFunc) -> RatFunc {
        if i == 0 {
            return a.clone();
        }
        if self.kind == QsiKind::DifferenceTrivial {
            return RatFunc::zero();
        }
        let mut x = a.clone();
        for _ in 0..i {
            if x.is_zero() {
                return x;
            }
            x = self.theta1(&x);
        }
        let f = qfact_at(i as u32, &self.q_value());
        x.scale(&f.inv().expect("[i]! is nonzero for symbolic q and for q = 1"))
    }

    /// `θ^(0..=n)(a)`.
    pub fn theta_table(&self, n: usize, a: &RatFunc) -> Vec<RatFunc> {
        let mut out = vec![a.clone()];
        if n == 0 {
            return out;
        }
        if self.kind == QsiKind::DifferenceTrivial {
            out.extend(std::iter::repeat_n(RatFunc::zero(), n));
            return out;
        }
        let q = self.q_value();
        let mut power = a.clone();
        for i in 1..=n {
            power = self.theta1(&power);
            let f = qfact_at(i as u32, &q);
            out.push(power.scale(&f.inv().unwrap()));
        }
        out
    }
}

/// `θ^(i)` for a structure, as a free function.
pub fn theta(s: &QsiStructure, i: usize, a: &RatFunc) -> RatFunc {
    s.theta(i, a)
}

pub fn sigma(a: &RatFunc) -> RatFunc {
    a.sigma()
}

pub fn ddt(a: &RatFunc) -> RatFunc {
    a.ddt()
}

/// Anything with `σ`, `q` and `θ^(i)` that the checker can test.
pub trait QsiAlgebra {
    type Elem: Certify + QAlgebra + Display;

    fn q(&self) -> ScalarQ;
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    fn theta(&self, i: usize, a: &Self::Elem) -> Self::Elem;

    fn sigma_pow(&self, n: usize, a: &Self::Elem) -> Self::Elem {
        (0..n).fold(a.clone(), |x, _| self.sigma(&x))
    }
}

impl QsiAlgebra for QsiStructure {
    type Elem = RatFunc;

    fn q(&self) -> ScalarQ {
        self.q_value()
    }

    fn sigma(&self, a: &RatFunc) -> RatFunc {
        QsiStructure::sigma(self, a)
    }

    fn theta(&self, i: usize, a: &RatFunc) -> RatFunc {
        QsiStructure::theta(self, i, a)
    }
}

/// Default sample set for axiom checks on K(t).
pub fn default_samples() -> Vec<RatFunc> {
    let t = RatFunc::t();
    let one = RatFunc::one();
    let two = RatFunc::from(ScalarQ::from_int(2));
    vec![
        t.clone(),
        &t * &t,
        &t + &one,
        t.inv().unwrap(),
        (&t - &one).inv().unwrap(),
        &(&(&t * &t) + &one) / &(&t - &two),
    ]
}

/// Checks the four axioms on `samples` (pairs for the Leibniz rule) for
/// all orders up to `max_order`.
pub fn check_qsi_axioms<A: QsiAlgebra>(alg: &A, samples: &[A::Elem], max_order: usize) -> Report {
    let mut report = Report::new("qsi-axioms");
    report.note(
        "leibniz rule: theta^(l)(ab) = sum over m+n=l of sigma^n(theta^(m)(a)) theta^(n)(b); \
         sigma acts on the left factor only",
    );
    let q = alg.q();
    let tables: Vec<Vec<A::Elem>> = samples
        .iter()
        .map(|a| (0..=max_order).map(|i| alg.theta(i, a)).collect())
        .collect();

    let mut ax1 = CheckAccumulator::new("axiom-1-identity", "theta^(0) = id");
    for (k, a) in samples.iter().enumerate() {
        ax1.compare(|| format!("sample {k}"), &tables[k][0], a);
    }
    report.push(ax1.finish());

    let mut ax2 = CheckAccumulator::new(
        "axiom-2-sigma-commutation",
        "q^i sigma theta^(i) = theta^(i) sigma",
    );
    for (a, table) in samples.iter().zip(&tables) {
        let sa = alg.sigma(a);
        for (i, th) in table.iter().enumerate().take(max_order + 1) {
            let lhs = alg.sigma(th).scale(&q.powi(i as i64).unwrap());
            let rhs = alg.theta(i, &sa);
            ax2.compare(|| format!("i = {i}, a = {a}"), &lhs, &rhs);
        }
    }
    report.push(ax2.finish());

    let mut ax3 = CheckAccumulator::new(
        "axiom-3-leibniz",
        "theta^(l)(ab) = sum_{m+n=l} sigma^n(theta^(m)(a)) theta^(n)(b)",
    );
    for (ka, a) in samples.iter().enumerate() {
        for (kb, b) in samples.iter().enumerate() {
            let ab = a.times(b);
            for l in 0..=max_order {
                let lhs = alg.theta(l, &ab);
                let mut rhs = ab.zero_like();
                for m in 0..=l {
                    let n = l - m;
                    let left = alg.sigma_pow(n, &tables[ka][m]);
                    rhs = rhs.plus(&left.times(&tables[kb][n]));
                }
                ax3.compare(|| format!("l = {l}, a = {a}, b = {b}"), &lhs, &rhs);
            }
        }
    }
    report.push(ax3.finish());

    let mut ax4 = CheckAccumulator::new(
        "axiom-4-composition",
        "theta^(i) theta^(j) = C(i+j, i)_q theta^(i+j)",
    );
    for (k, a) in samples.iter().enumerate() {
        for i in 0..=max_order {
            for j in 0..=(max_order - i) {
                let lhs = alg.theta(i, &tables[k][j]);
                let rhs = tables[k][i + j].scale(&qbinom_at(i as u32, j as u32, &q));
                ax4.compare(|| format!("i = {i}, j = {j}, a = {a}"), &lhs, &rhs);
            }
        }
    }
    report.push(ax4.finish());
    report
}

/// `θ^(1)(t) = 1`, `θ^(i)(t) = 0` for `2 <= i <= max` and `σ(t) = qt` for
/// the canonical structure.
pub fn verify_theta_table(max: usize) -> Report {
    let s = QsiStructure::canonical();
    let t = RatFunc::t();
    let table = s.theta_table(max, &t);
    let mut report = Report::new("theta-table");
    report.push(Check::compare("sigma-t", "sigma(t) = qt", &s.sigma(&t), &t.scale(&ScalarQ::q())));
    report.push(Check::compare("theta-1-t", "theta^(1)(t) = 1", &table[1], &RatFunc::one()));
    for (i, v) in table.iter().enumerate().skip(2) {
        report.push(Check::compare(format!("theta-{i}-t"), format!("theta^({i})(t) = 0"), v, &RatFunc::zero()));
    }
    report
}
