use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::One;

use crate::ncalg::{NCAlgebraSpec, Word};
use crate::report::{Check, CheckAccumulator, Report};
use crate::ring::{Certify, ConstRing, Depth, QAlgebra, Ring};
use crate::scalar::{format_terms, ScalarQ};

/// The rewriting presentation of `h_q`: `v*u -> q u*v`, `u*uinv -> 1`,
/// `uinv*u -> 1`, and therefore `v*uinv -> q^-1 uinv*v`.
pub fn hq_spec() -> &'static Arc<NCAlgebraSpec> {
    static SPEC: OnceLock<Arc<NCAlgebraSpec>> = OnceLock::new();
    SPEC.get_or_init(|| {
        NCAlgebraSpec::builder("h_q")
            .generator("u")
            .inverse_pair("u", "uinv")
            .generator("v")
            .commute("v", "u", ScalarQ::q())
            .build()
            .expect("h_q presentation is confluent")
    })
}

/// `u^a v^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: i64,
    pub b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub fn new(a: i64, b: u32) -> Self {
        Monomial { a, b }
    }

    fn word(&self) -> Word {
        let spec = hq_spec();
        let u = spec.index_of(if self.a >= 0 { "u" } else { "uinv" }).unwrap();
        let v = spec.index_of("v").unwrap();
        let mut w = vec![u; self.a.unsigned_abs() as usize];
        w.extend(std::iter::repeat_n(v, self.b as usize));
        w
    }

    fn from_word(w: &[u16]) -> Self {
        let spec = hq_spec();
        let mut m = Monomial::ONE;
        for &x in w {
            match spec.letter_name(x) {
                "u" => m.a += 1,
                "uinv" => m.a -= 1,
                _ => m.b += 1,
            }
        }
        m
    }

    /// Normal form of the product, computed by the rewriting engine.
    pub fn mul(&self, other: &Monomial) -> (ScalarQ, Monomial) {
        let mut w = self.word();
        w.extend(other.word());
        let (c, nf) = hq_spec().normalize_word(&w).expect("h_q has no nilpotent relations");
        (c, Monomial::from_word(&nf))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("u".to_string()),
            a => parts.push(format!("u^{a}")),
        }
        match self.b {
            0 => {}
            1 => parts.push("v".to_string()),
            b => parts.push(format!("v^{b}")),
        }
        f.write_str(&parts.join("*"))
    }
}

fn insert<K: Ord>(map: &mut BTreeMap<K, ScalarQ>, k: K, c: ScalarQ) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// An element of `h_q` as a combination of normal monomials `u^a v^b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HopfQElement {
    terms: BTreeMap<Monomial, ScalarQ>,
}

impl HopfQElement {
    pub fn zero() -> Self {
        HopfQElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: ScalarQ) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn one() -> Self {
        Self::scalar(ScalarQ::one())
    }

    pub fn term(c: ScalarQ, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        insert(&mut terms, m, c);
        HopfQElement { terms }
    }

    pub fn monomial(a: i64, b: u32) -> Self {
        Self::term(ScalarQ::one(), Monomial::new(a, b))
    }

    pub fn u() -> Self {
        Self::monomial(1, 0)
    }

    pub fn uinv() -> Self {
        Self::monomial(-1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> ScalarQ {
        self.terms.get(&m).cloned().unwrap_or_else(ScalarQ::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            insert(&mut terms, *m, c.clone());
        }
        HopfQElement { terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-ScalarQ::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            insert(&mut terms, *m, a * c);
        }
        HopfQElement { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (c, m) = m1.mul(m2);
                insert(&mut terms, m, &(c1 * c2) * &c);
            }
        }
        HopfQElement { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Applies a linear map given on monomials.
    pub fn linear_map<T>(&self, zero: T, f: impl Fn(&Monomial) -> T, add: impl Fn(&T, &T) -> T, scale: impl Fn(&T, &ScalarQ) -> T) -> T {
        self.terms.iter().fold(zero, |acc, (m, c)| add(&acc, &scale(&f(m), c)))
    }

    /// Coefficients specialized at `q = r`.
    pub fn eval_coefficients(&self, r: &BigRational) -> Option<BTreeMap<Monomial, BigRational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.eval_at(r).ok()?;
            if v != BigRational::from_integer(0.into()) {
                out.insert(*m, v);
            }
        }
        Some(out)
    }
}

impl fmt::Display for HopfQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().map(|(m, c)| (c, m.to_string()))))
    }
}

impl fmt::Debug for HopfQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for HopfQElement {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl ConstRing for HopfQElement {
    fn zero() -> Self {
        HopfQElement::zero()
    }
    fn one() -> Self {
        HopfQElement::one()
    }
    fn from_i64(n: i64) -> Self {
        Self::scalar(ScalarQ::from_int(n))
    }
}

impl QAlgebra for HopfQElement {
    fn scale(&self, c: &ScalarQ) -> Self {
        HopfQElement::scale(self, c)
    }
}

impl Certify for HopfQElement {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        (self == other, Depth::exact())
    }
}

/// An element of the `k`-fold tensor power `h_q ⊗ ... ⊗ h_q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HopfTensor {
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, ScalarQ>,
}

impl HopfTensor {
    pub fn zero(arity: usize) -> Self {
        HopfTensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::pure(&vec![HopfQElement::one(); arity])
    }

    /// `x_1 ⊗ ... ⊗ x_k`.
    pub fn pure(factors: &[HopfQElement]) -> Self {
        let mut acc: BTreeMap<Vec<Monomial>, ScalarQ> = BTreeMap::new();
        acc.insert(Vec::new(), ScalarQ::one());
        for x in factors {
            let mut next = BTreeMap::new();
            for (ms, c) in &acc {
                for (m, d) in x.terms() {
                    let mut k = ms.clone();
                    k.push(*m);
                    insert(&mut next, k, c * d);
                }
            }
            acc = next;
        }
        HopfTensor {
            arity: factors.len(),
            terms: acc,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            insert(&mut terms, k.clone(), c.clone());
        }
        HopfTensor {
            arity: self.arity,
            terms,
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        for (k, a) in &self.terms {
            insert(&mut terms, k.clone(), a * c);
        }
        HopfTensor {
            arity: self.arity,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ScalarQ::one()))
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arities differ");
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut c = c1 * c2;
                let mut key = Vec::with_capacity(self.arity);
                for (m1, m2) in k1.iter().zip(k2) {
                    let (d, m) = m1.mul(m2);
                    c = &c * &d;
                    key.push(m);
                }
                insert(&mut terms, key, c);
            }
        }
        HopfTensor {
            arity: self.arity,
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.arity), |acc, _| acc.mul(self))
    }

    /// Replaces the factor in slot `k` by `f` of it, a tensor of arity `j`;
    /// the result has arity `arity - 1 + j`.
    pub fn expand_slot(&self, k: usize, j: usize, f: impl Fn(&Monomial) -> HopfTensor) -> Self {
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let image = f(&key[k]);
            for (mid, d) in image.terms() {
                let mut nk = key[..k].to_vec();
                nk.extend_from_slice(mid);
                nk.extend_from_slice(&key[k + 1..]);
                insert(&mut terms, nk, c * d);
            }
        }
        HopfTensor {
            arity: self.arity - 1 + j,
            terms,
        }
    }

    /// Applies a linear map in slot `k`.
    pub fn map_slot(&self, k: usize, f: impl Fn(&Monomial) -> HopfQElement) -> Self {
        self.expand_slot(k, 1, |m| HopfTensor::pure(&[f(m)]))
    }

    /// Applies `ε` in slot `k`, lowering the arity.
    pub fn counit_slot(&self, k: usize) -> Self {
        self.expand_slot(k, 0, |m| HopfTensor::one(0).scale(&hq_epsilon(&HopfQElement::monomial(m.a, m.b))))
    }

    /// `m(x ⊗ y) = xy` on a tensor of arity 2; arity 1 is read as an element.
    pub fn multiply_out(&self) -> HopfQElement {
        let mut out = HopfQElement::zero();
        for (key, c) in &self.terms {
            let p = key.iter().fold(HopfQElement::one(), |acc, m| acc.mul(&HopfQElement::monomial(m.a, m.b)));
            out = out.add(&p.scale(c));
        }
        out
    }

    /// Reverses the factors.
    pub fn flip(&self) -> Self {
        HopfTensor {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.iter().rev().copied().collect(), c.clone())).collect(),
        }
    }

    /// Whether every coefficient vanishes at `q = r`; `None` at a pole.
    pub fn vanishes_at(&self, r: &BigRational) -> Option<bool> {
        for c in self.terms.values() {
            if c.eval_at(r).ok()? != BigRational::from_integer(0.into()) {
                return Some(false);
            }
        }
        Some(true)
    }
}

impl fmt::Display for HopfTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_terms(self.terms.iter().map(|(k, c)| {
            let parts: Vec<String> = k
                .iter()
                .map(|m| if *m == Monomial::ONE { "1".to_string() } else { m.to_string() })
                .collect();
            (c, parts.join(" (x) "))
        }));
        f.write_str(&s)
    }
}

impl fmt::Debug for HopfTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for HopfTensor {
    fn zero_like(&self) -> Self {
        Self::zero(self.arity)
    }
    fn one_like(&self) -> Self {
        Self::one(self.arity)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn negate(&self) -> Self {
        self.scale(&-ScalarQ::one())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl QAlgebra for HopfTensor {
    fn scale(&self, c: &ScalarQ) -> Self {
        HopfTensor::scale(self, c)
    }
}

impl Certify for HopfTensor {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        (self == other, Depth::exact())
    }
}

pub fn hq_mul(x: &HopfQElement, y: &HopfQElement) -> HopfQElement {
    x.mul(y)
}

fn delta_u(sign: i64) -> HopfTensor {
    let g = HopfQElement::monomial(sign, 0);
    HopfTensor::pure(&[g.clone(), g])
}

fn delta_v() -> HopfTensor {
    HopfTensor::pure(&[HopfQElement::u(), HopfQElement::v()]).add(&HopfTensor::pure(&[HopfQElement::v(), HopfQElement::one()]))
}

fn delta_monomial(m: &Monomial) -> HopfTensor {
    let sign = if m.a >= 0 { 1 } else { -1 };
    delta_u(sign).pow(m.a.unsigned_abs() as u32).mul(&delta_v().pow(m.b))
}

/// `Δ`, the algebra morphism with `Δ(u) = u⊗u`, `Δ(u^-1) = u^-1⊗u^-1`,
/// `Δ(v) = u⊗v + v⊗1`.
pub fn hq_delta(x: &HopfQElement) -> HopfTensor {
    x.linear_map(HopfTensor::zero(2), delta_monomial, HopfTensor::add, HopfTensor::scale)
}

/// `ε(u^a v^b)` is 1 for `b = 0` and 0 otherwise.
pub fn hq_epsilon(x: &HopfQElement) -> ScalarQ {
    x.coefficient_sum(|m| m.b == 0)
}

impl HopfQElement {
    fn coefficient_sum(&self, keep: impl Fn(&Monomial) -> bool) -> ScalarQ {
        self.terms
            .iter()
            .filter(|(m, _)| keep(m))
            .fold(ScalarQ::zero(), |acc, (_, c)| &acc + c)
    }
}

fn antipode_monomial(m: &Monomial) -> HopfQElement {
    // S(u^a v^b) = S(v)^b S(u)^a
    let s_v = HopfQElement::uinv().mul(&HopfQElement::v()).neg();
    let s_u = HopfQElement::monomial(-m.a.signum(), 0);
    s_v.pow(m.b).mul(&s_u.pow(m.a.unsigned_abs() as u32))
}

/// The antipode: the anti-morphism with `S(u) = u^-1`, `S(u^-1) = u`,
/// `S(v) = -u^-1 v`.
pub fn hq_antipode(x: &HopfQElement) -> HopfQElement {
    x.linear_map(HopfQElement::zero(), antipode_monomial, HopfQElement::add, HopfQElement::scale)
}

/// `S(u^a v^b) = (-1)^b q^(-b(b-1)/2 - ab) u^(-a-b) v^b`.
pub fn antipode_closed_form(a: i64, b: u32) -> HopfQElement {
    let b64 = b as i64;
    let sign = if b.is_multiple_of(2) { ScalarQ::one() } else { -ScalarQ::one() };
    let c = &sign * &ScalarQ::q_pow(-(b64 * (b64 - 1)) / 2 - a * b64);
    HopfQElement::term(c, Monomial::new(-a - b64, b))
}

fn basis(a_bound: i64, b_bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in -a_bound..=a_bound {
        for b in 0..=b_bound {
            out.push(Monomial::new(a, b));
        }
    }
    out
}

/// Exact checks of the Hopf axioms on all `u^a v^b` with `|a| ≤ a_bound`,
/// `b ≤ b_bound`.
pub fn verify_hopf_axioms(a_bound: i64, b_bound: u32) -> Report {
    let mut report = Report::new("hopf-axioms");
    report.note(format!("basis monomials u^a v^b with |a| <= {a_bound}, b <= {b_bound}"));
    let monomials = basis(a_bound, b_bound);
    let deltas: Vec<HopfTensor> = monomials.iter().map(delta_monomial).collect();

    let mut coassoc = CheckAccumulator::new("coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta");
    let mut counit_l = CheckAccumulator::new("counit-left", "(eps (x) id) Delta = id");
    let mut counit_r = CheckAccumulator::new("counit-right", "(id (x) eps) Delta = id");
    let mut anti_l = CheckAccumulator::new("antipode-left", "m (S (x) id) Delta = eta eps");
    let mut anti_r = CheckAccumulator::new("antipode-right", "m (id (x) S) Delta = eta eps");
    for (m, d) in monomials.iter().zip(&deltas) {
        let label = || format!("u^{} v^{}", m.a, m.b);
        let lhs = d.expand_slot(0, 2, delta_monomial);
        let rhs = d.expand_slot(1, 2, delta_monomial);
        coassoc.compare(label, &lhs, &rhs);

        let x = HopfTensor::pure(&[HopfQElement::monomial(m.a, m.b)]);
        counit_l.compare(label, &d.counit_slot(0), &x);
        counit_r.compare(label, &d.counit_slot(1), &x);

        let unit = HopfQElement::scalar(hq_epsilon(&HopfQElement::monomial(m.a, m.b)));
        anti_l.compare(label, &d.map_slot(0, antipode_monomial).multiply_out(), &unit);
        anti_r.compare(label, &d.map_slot(1, antipode_monomial).multiply_out(), &unit);
    }
    for acc in [coassoc, counit_l, counit_r, anti_l, anti_r] {
        report.push(acc.finish());
    }

    let (u, uinv, v) = (HopfQElement::u(), HopfQElement::uinv(), HopfQElement::v());
    let qinv = ScalarQ::q_pow(-1);
    let du = delta_u(1);
    let duinv = delta_u(-1);
    let dv = delta_v();

    let mut rel_delta = CheckAccumulator::new(
        "delta-respects-relations",
        "Delta(u)Delta(v) - q^-1 Delta(v)Delta(u) = 0, Delta(u)Delta(u^-1) = 1 (x) 1",
    );
    rel_delta.compare(|| "uv - q^-1 vu".into(), &du.mul(&dv).sub(&dv.mul(&du).scale(&qinv)), &HopfTensor::zero(2));
    rel_delta.compare(|| "u u^-1".into(), &du.mul(&duinv), &HopfTensor::one(2));
    rel_delta.compare(|| "u^-1 u".into(), &duinv.mul(&du), &HopfTensor::one(2));
    report.push(rel_delta.finish());

    let eps = |x: &HopfQElement| hq_epsilon(x);
    let mut rel_eps = CheckAccumulator::new("epsilon-respects-relations", "eps(u)eps(v) - q^-1 eps(v)eps(u) = 0, eps(u)eps(u^-1) = 1");
    rel_eps.compare(|| "uv - q^-1 vu".into(), &(&(&eps(&u) * &eps(&v)) - &(&qinv * &(&eps(&v) * &eps(&u)))), &ScalarQ::zero());
    rel_eps.compare(|| "u u^-1".into(), &(&eps(&u) * &eps(&uinv)), &ScalarQ::one());
    for m1 in &monomials {
        for m2 in &monomials {
            let x = HopfQElement::monomial(m1.a, m1.b);
            let y = HopfQElement::monomial(m2.a, m2.b);
            rel_eps.compare(|| format!("eps({m1} * {m2})"), &eps(&x.mul(&y)), &(&eps(&x) * &eps(&y)));
        }
    }
    report.push(rel_eps.finish());

    let s = hq_antipode;
    let mut rel_s = CheckAccumulator::new(
        "antipode-respects-relations",
        "S(v)S(u) - q^-1 S(u)S(v) = 0, S(u^-1)S(u) = 1, S(xy) = S(y)S(x)",
    );
    rel_s.compare(|| "S(uv - q^-1 vu)".into(), &s(&v).mul(&s(&u)).sub(&s(&u).mul(&s(&v)).scale(&qinv)), &HopfQElement::zero());
    rel_s.compare(|| "S(u u^-1)".into(), &s(&uinv).mul(&s(&u)), &HopfQElement::one());
    for m1 in &monomials {
        for m2 in &monomials {
            let x = HopfQElement::monomial(m1.a, m1.b);
            let y = HopfQElement::monomial(m2.a, m2.b);
            rel_s.compare(|| format!("S({m1} * {m2})"), &s(&x.mul(&y)), &s(&y).mul(&s(&x)));
        }
    }
    report.push(rel_s.finish());

    let mut closed = CheckAccumulator::new(
        "antipode-closed-form",
        "S(u^a v^b) = (-1)^b q^(-b(b-1)/2 - ab) u^(-a-b) v^b",
    );
    for a in -2..=2 {
        for b in 0..=2 {
            closed.compare(|| format!("u^{a} v^{b}"), &antipode_monomial(&Monomial::new(a, b)), &antipode_closed_form(a, b));
        }
    }
    report.push(closed.finish());
    report
}

/// Witnesses that `h_q` is neither commutative nor cocommutative, and
/// their specializations at `q = 1`.
pub fn structure_witnesses() -> Report {
    let mut report = Report::new("hopf-witnesses");
    let (u, v) = (HopfQElement::u(), HopfQElement::v());
    let comm = u.mul(&v).sub(&v.mul(&u));
    let dv = hq_delta(&v);
    let cocomm = dv.sub(&dv.flip());
    let one = <BigRational as One>::one();

    report.push(Check::from_bool("noncommutative", "[u, v] != 0", !comm.is_zero(), || "[u, v] = 0".into()));
    report.push(Check::from_bool(
        "noncocommutative",
        "Delta(v) != flip(Delta(v))",
        !cocomm.is_zero(),
        || "Delta(v) is symmetric".into(),
    ));
    let comm_at_one = comm.eval_coefficients(&one).map(|m| m.is_empty());
    report.push(Check::from_bool(
        "commutator-vanishes-at-q=1",
        "[u, v] at q = 1 is 0",
        comm_at_one == Some(true),
        || format!("[u, v] = {comm}"),
    ));
    let cocomm_at_one = HopfTensor::vanishes_at(&cocomm, &one);
    report.push(Check::from_bool(
        "cocommutator-vanishes-at-q=1",
        "Delta(v) - flip(Delta(v)) at q = 1 is 0",
        cocomm_at_one == Some(true),
        || format!("Delta(v) - flip(Delta(v)) = {cocomm}, which has no q-dependence"),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    #[test]
    fn products_follow_the_relation() {
        let (u, uinv, v) = (HopfQElement::u(), HopfQElement::uinv(), HopfQElement::v());
        assert_eq!(hq_mul(&v, &u), HopfQElement::term(q(), Monomial::new(1, 1)));
        assert_eq!(hq_mul(&u, &uinv), HopfQElement::one());
        // u^-1 v = q v u^-1
        assert_eq!(hq_mul(&uinv, &v), hq_mul(&v, &uinv).scale(&q()));
        assert_eq!(hq_mul(&uinv, &v), HopfQElement::monomial(-1, 1));
    }

    #[test]
    fn monomial_products_match_closed_form() {
        // v^b u^c = q^(bc) u^c v^b
        for a in -2..=2 {
            for b in 0..3 {
                for c in -2..=2 {
                    for d in 0..3 {
                        let (k, m) = Monomial::new(a, b).mul(&Monomial::new(c, d));
                        assert_eq!(m, Monomial::new(a + c, b + d));
                        assert_eq!(k, ScalarQ::q_pow(b as i64 * c));
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let u = HopfQElement::u();
        assert_eq!(hq_delta(&u), HopfTensor::pure(&[u.clone(), u.clone()]));
        assert_eq!(hq_delta(&HopfQElement::one()), HopfTensor::one(2));
        // Δ(v^2) = u^2 ⊗ v^2 + (1 + q) uv ⊗ v + v^2 ⊗ 1
        let v2 = HopfQElement::monomial(0, 2);
        let expected = HopfTensor::pure(&[HopfQElement::monomial(2, 0), v2.clone()])
            .add(&HopfTensor::pure(&[HopfQElement::monomial(1, 1), HopfQElement::v()]).scale(&ScalarQ::from_coeffs(&[1, 1])))
            .add(&HopfTensor::pure(&[v2.clone(), HopfQElement::one()]));
        assert_eq!(hq_delta(&v2), expected);
    }

    #[test]
    fn counit_and_antipode_examples() {
        assert_eq!(hq_epsilon(&HopfQElement::monomial(3, 0)), ScalarQ::one());
        assert_eq!(hq_epsilon(&HopfQElement::v()), ScalarQ::zero());
        assert_eq!(hq_epsilon(&HopfQElement::one()), ScalarQ::one());
        assert_eq!(hq_antipode(&HopfQElement::v()), HopfQElement::monomial(-1, 1).neg());
        assert_eq!(hq_antipode(&HopfQElement::one()), HopfQElement::one());
        let uv = HopfQElement::monomial(1, 1);
        assert_eq!(hq_antipode(&uv), HopfQElement::term(-ScalarQ::q_pow(-1), Monomial::new(-2, 1)));
    }

    #[test]
    fn antipode_identity_on_v_cancels() {
        let d = hq_delta(&HopfQElement::v());
        let lhs = d.map_slot(0, antipode_monomial).multiply_out();
        assert!(lhs.is_zero());
    }

    #[test]
    fn axioms_hold_on_small_basis() {
        let r = verify_hopf_axioms(2, 2);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn tensor_printing() {
        assert_eq!(hq_delta(&HopfQElement::v()).to_string(), "v (x) 1 + u (x) v");
        assert_eq!(HopfQElement::monomial(-2, 3).to_string(), "u^-2*v^3");
    }

    #[test]
    fn witnesses() {
        let r = structure_witnesses();
        assert!(r.find("noncommutative").unwrap().pass);
        assert!(r.find("noncocommutative").unwrap().pass);
        assert!(r.find("commutator-vanishes-at-q=1").unwrap().pass);
        // Δ(v) - flip Δ(v) = u⊗v + v⊗1 - v⊗u - 1⊗v does not involve q
        assert!(!r.find("cocommutator-vanishes-at-q=1").unwrap().pass);
    }
}
