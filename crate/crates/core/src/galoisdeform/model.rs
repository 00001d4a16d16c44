use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::DeformError;
use crate::ncalg::{catalog, NCAlgebraSpec, NCElement, NILPOTENCY_SEARCH_LIMIT};
use crate::quantumgroup::Convention;
use crate::ratfunc::RatFunc;
use crate::report::{Check, Report};
use crate::ring::{Certify, QAlgebra, Ring};
use crate::scalar::ScalarQ;
use crate::seqseries::{hopf_morphism, SeqWindow, TaylorPoly, TwistedSeries, DEFAULT_M, DEFAULT_N};

/// Coefficients `F(N, A[t][[W]])`.
pub type ModelCoef = SeqWindow<TaylorPoly<NCElement>>;
/// Elements of `F(N, A[t][[W]])[[X]]`.
pub type ModelSeries = TwistedSeries<ModelCoef>;

/// Series order `n`, window `m` and `W`-order `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModelDepth {
    pub n: usize,
    pub m: usize,
    pub w: usize,
}

impl ModelDepth {
    pub fn new(n: usize, m: usize) -> Self {
        ModelDepth { n, m, w: 3 }
    }

    /// Enough to read off and confirm images of `Q` and `X`. The window
    /// must exceed the order so that `Σ` comparisons are not vacuous.
    pub fn small() -> Self {
        ModelDepth { n: 3, m: 5, w: 2 }
    }
}

impl Default for ModelDepth {
    fn default() -> Self {
        ModelDepth::new(DEFAULT_N, DEFAULT_M)
    }
}

impl fmt::Display for ModelDepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={},M={},W={}", self.n, self.m, self.w)
    }
}

/// The hull `K(t)(TQ + X)<X, Q>` realized with coefficients in a test
/// algebra `A` extended by a central `t`.
pub struct GaloisHullModel {
    spec: Arc<NCAlgebraSpec>,
    depth: ModelDepth,
}

impl GaloisHullModel {
    pub fn new(algebra: &Arc<NCAlgebraSpec>, depth: ModelDepth) -> Result<Self, DeformError> {
        Ok(GaloisHullModel {
            spec: algebra.with_central("t")?,
            depth,
        })
    }

    pub fn spec(&self) -> &Arc<NCAlgebraSpec> {
        &self.spec
    }

    pub fn depth(&self) -> ModelDepth {
        self.depth
    }

    /// An element of `A` inside `A[t]`.
    pub fn embed(&self, a: &NCElement) -> Result<NCElement, DeformError> {
        Ok(a.transport(&self.spec)?)
    }

    fn taylor_const(&self, a: NCElement) -> TaylorPoly<NCElement> {
        TaylorPoly::constant(a, self.depth.w, "W")
    }

    fn coef_const(&self, a: NCElement) -> ModelCoef {
        SeqWindow::constant(self.taylor_const(a), self.depth.m)
    }

    fn coef_proto(&self) -> ModelCoef {
        self.coef_const(self.spec.zero())
    }

    /// `a` as a constant sequence, constant in `W`, in degree 0.
    pub fn constant(&self, a: &NCElement) -> Result<ModelSeries, DeformError> {
        Ok(TwistedSeries::constant(self.coef_const(self.embed(a)?), self.depth.n))
    }

    pub fn one(&self) -> ModelSeries {
        TwistedSeries::constant(self.coef_const(self.spec.one()), self.depth.n)
    }

    /// `T = t + W`, the image of `t` under the Taylor morphism.
    pub fn t_big(&self) -> ModelSeries {
        let mut c = vec![self.spec.zero(); self.depth.w];
        if self.depth.w > 0 {
            c[0] = self.spec.g("t");
        }
        if self.depth.w > 1 {
            c[1] = self.spec.one();
        }
        let taylor = TaylorPoly::from_coeffs(&self.spec.zero(), c, "W");
        TwistedSeries::constant(SeqWindow::constant(taylor, self.depth.m), self.depth.n)
    }

    /// `Q = [1, q, q^2, ...]`.
    pub fn q_seq(&self) -> ModelSeries {
        let one = self.spec.one();
        let proto = self.taylor_const(self.spec.zero());
        let window = SeqWindow::from_fn(&proto, self.depth.m, |k| {
            self.taylor_const(one.scale(&ScalarQ::q_pow(k as i64)))
        });
        TwistedSeries::constant(window, self.depth.n)
    }

    pub fn x(&self) -> ModelSeries {
        TwistedSeries::x(&self.coef_proto(), self.depth.n)
    }

    /// A polynomial in `t` as an element of `A[t]`.
    fn poly_to_nc(&self, p: &RatFunc) -> Result<NCElement, DeformError> {
        let den = p.denominator();
        if !den.is_constant() {
            return Err(DeformError::NotPolynomial(p.to_string()));
        }
        let t = self.spec.g("t");
        let d = den.coeff(0);
        let mut out = self.spec.zero();
        for (k, c) in p.numerator().coeffs().iter().enumerate() {
            let c = ScalarQ::from_polys(c.clone(), d.clone()).expect("nonzero denominator");
            out = &out + &t.pow(k as u32).scale(&c);
        }
        Ok(out)
    }

    /// `p(t + W) = Σ p^(k)(t) W^k / k!`.
    fn taylor_shift(&self, p: &RatFunc) -> Result<TaylorPoly<NCElement>, DeformError> {
        let mut coeffs = Vec::with_capacity(self.depth.w);
        let mut d = p.clone();
        let mut fact = ScalarQ::one();
        for k in 0..self.depth.w {
            if k > 0 {
                d = d.ddt();
                fact = &fact * &ScalarQ::from_int(k as i64);
            }
            coeffs.push(self.poly_to_nc(&d)?.scale(&fact.inv().unwrap()));
        }
        Ok(TaylorPoly::from_coeffs(&self.spec.zero(), coeffs, "W"))
    }

    /// `ι(a)` pushed through the Taylor morphism; `a` must be a polynomial.
    pub fn iota(&self, a: &RatFunc) -> Result<ModelSeries, DeformError> {
        let series = hopf_morphism(a, self.depth.n, self.depth.m);
        let proto = self.taylor_const(self.spec.zero());
        let mut coeffs = Vec::with_capacity(self.depth.n);
        for w in series.coeffs() {
            let values = w.values().iter().map(|p| self.taylor_shift(p)).collect::<Result<Vec<_>, _>>()?;
            coeffs.push(SeqWindow::with_proto(&proto, values));
        }
        Ok(TwistedSeries::from_coeffs(&self.coef_proto(), coeffs))
    }

    pub fn sigma(&self, s: &ModelSeries) -> ModelSeries {
        s.sigma_series()
    }

    pub fn theta(&self, i: usize, s: &ModelSeries) -> ModelSeries {
        s.theta(i)
    }

    /// `d/dW` on every coefficient.
    pub fn d_dw(&self, s: &ModelSeries) -> ModelSeries {
        let proto = self.taylor_const(self.spec.zero());
        s.map(&self.coef_proto(), |c| c.map(&proto, |p| p.derivative()))
    }

    /// `h(Q) = eQ` and `h(X) = fQ + X`.
    pub fn images(&self, cand: &DeformationCandidate) -> Result<(ModelSeries, ModelSeries), DeformError> {
        let q = self.q_seq();
        let hq = self.constant(&cand.e)?.times(&q);
        let hx = self.constant(&cand.f)?.times(&q).plus(&self.x());
        Ok((hq, hx))
    }

    /// Entry `X^i`, sequence index `k`, `W^j`.
    pub fn entry(&self, s: &ModelSeries, i: usize, k: usize, j: usize) -> Option<NCElement> {
        s.coeffs().get(i)?.get(k)?.coeffs().get(j).cloned()
    }

    /// Position and value of the first nonzero entry.
    pub fn leading_entry(&self, s: &ModelSeries) -> Option<((usize, usize, usize), NCElement)> {
        for (i, w) in s.coeffs().iter().enumerate() {
            for (k, p) in w.values().iter().enumerate() {
                for (j, c) in p.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        return Some(((i, k, j), c.clone()));
                    }
                }
            }
        }
        None
    }

    /// The scalar `λ` with `QX = λ XQ`, read off and then confirmed.
    pub fn ambient_scalar(&self) -> Result<ScalarQ, DeformError> {
        let (q, x) = (self.q_seq(), self.x());
        let qx = q.times(&x);
        let xq = x.times(&q);
        let ((i, k, j), lead) = self
            .leading_entry(&xq)
            .ok_or_else(|| DeformError::Inconclusive("XQ vanishes at this depth".into()))?;
        let other = self.entry(&qx, i, k, j).unwrap_or_else(|| self.spec.zero());
        let (a, b) = (other.scalar_part(), lead.scalar_part());
        if other != self.spec.one().scale(&a) || lead != self.spec.one().scale(&b) {
            return Err(DeformError::Inconclusive(format!("QX and XQ are not scalar multiples: {other} vs {lead}")));
        }
        let lambda = &a / &b;
        let (eq, depth) = qx.agree(&xq.scale(&lambda));
        if !eq || depth.is_vacuous() {
            return Err(DeformError::Inconclusive(format!("QX != ({lambda}) XQ at depth {depth}")));
        }
        Ok(lambda)
    }
}

/// Data `(e, f)` of a deformation `h(Q) = eQ`, `h(X) = fQ + X`.
#[derive(Clone, PartialEq)]
pub struct DeformationCandidate {
    e: NCElement,
    f: NCElement,
}

impl DeformationCandidate {
    /// Requires `e` invertible and `f` nilpotent.
    pub fn new(e: NCElement, f: NCElement) -> Result<Self, DeformError> {
        if !e.same_algebra(&f) {
            return Err(crate::ncalg::NcError::SpecMismatch.into());
        }
        if e.invert().is_err() {
            return Err(DeformError::InvalidCandidate(format!("e = {e} is not invertible")));
        }
        if !f.is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT))? {
            return Err(DeformError::InvalidCandidate(format!("f = {f} is not nilpotent")));
        }
        Ok(DeformationCandidate { e, f })
    }

    /// `h = ι`.
    pub fn identity(spec: &Arc<NCAlgebraSpec>) -> Self {
        DeformationCandidate {
            e: spec.one(),
            f: spec.zero(),
        }
    }

    pub fn e(&self) -> &NCElement {
        &self.e
    }

    pub fn f(&self) -> &NCElement {
        &self.f
    }

    pub fn spec(&self) -> &Arc<NCAlgebraSpec> {
        self.e.spec()
    }

    /// Whether `e - 1` is nilpotent, so that `h ≡ ι` modulo nilpotents.
    pub fn is_infinitesimal(&self) -> bool {
        let n = &self.e - &self.spec().one();
        n.is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT)).unwrap_or(false)
    }
}

impl fmt::Display for DeformationCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e = {}, f = {}", self.e, self.f)
    }
}

impl fmt::Debug for DeformationCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in {}", self.spec().name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationReport {
    pub candidate: String,
    pub algebra: String,
    /// The relation forced on `(e, f)`, as derived from `QX = λ XQ`.
    pub convention: Convention,
    pub depth: ModelDepth,
    pub report: Report,
    /// Leading entry of `h(Q)h(X) - λ h(X)h(Q)` when nonzero.
    pub residual: Option<String>,
}

impl DeformationReport {
    pub fn pass(&self) -> bool {
        self.report.all_pass()
    }
}

fn convention_for(c: &ScalarQ) -> Option<Convention> {
    if *c == ScalarQ::q() {
        Some(Convention::EfQFe)
    } else if *c == ScalarQ::q_pow(-1) {
        Some(Convention::QEfFe)
    } else {
        None
    }
}

/// Builds `h` in the model and checks that it fixes the base, commutes
/// with `Σ`, `Θ^(1)` and `d/dW` on the generators, and preserves
/// `QX = λ XQ`.
pub fn check_deformation(cand: &DeformationCandidate, depth: ModelDepth) -> Result<DeformationReport, DeformError> {
    let model = GaloisHullModel::new(cand.spec(), depth)?;
    let lambda = model.ambient_scalar()?;
    let convention = convention_for(&lambda)
        .ok_or_else(|| DeformError::Inconclusive(format!("ambient scalar {lambda} is neither q nor 1/q")))?;
    let (hq, hx) = model.images(cand)?;
    let q = ScalarQ::q();
    let mut report = Report::new("deformation");
    report.note(format!("model depth {depth}; ambient relation QX = ({lambda}) XQ"));

    let t_big = model.t_big();
    let iota_t = model.iota(&RatFunc::t())?;
    report.push(Check::compare(
        "iota-anchor",
        "iota(t) = TQ + X with T = t + W",
        &iota_t,
        &t_big.times(&model.q_seq()).plus(&model.x()),
    ));
    // h is A[T]-linear, so on the base it is the identity; the images of
    // the base generators are T and 1.
    let h_t = t_big.clone();
    report.push(Check::compare("fixes-base", "h(T) = T", &h_t, &t_big));
    report.push(Check::compare("sigma-hQ", "Sigma h(Q) = q h(Q)", &model.sigma(&hq), &hq.scale(&q)));
    report.push(Check::compare("theta-hQ", "Theta^(1) h(Q) = 0", &model.theta(1, &hq), &hq.zero_like()));
    report.push(Check::compare("sigma-hX", "Sigma h(X) = q h(X)", &model.sigma(&hx), &hx.scale(&q)));
    report.push(Check::compare("theta-hX", "Theta^(1) h(X) = 1", &model.theta(1, &hx), &model.one()));
    let dq = model.d_dw(&hq);
    let dx = model.d_dw(&hx);
    report.push(Check::compare("ddw-hQ", "d/dW h(Q) = 0", &dq, &dq.zero_like()));
    report.push(Check::compare("ddw-hX", "d/dW h(X) = 0", &dx, &dx.zero_like()));

    let lhs = hq.times(&hx);
    let rhs = hx.times(&hq).scale(&lambda);
    let residual_series = lhs.minus(&rhs);
    let (_, rdepth) = lhs.agree(&rhs);
    let residual = model.leading_entry(&residual_series).map(|(_, r)| r.to_string());
    let mut rel = match &residual {
        None => Check::pass("relation", "h(Q)h(X) = q h(X)h(Q)"),
        Some(r) => Check::fail("relation", "h(Q)h(X) = q h(X)h(Q)", format!("residual {r}")),
    };
    if rdepth.is_vacuous() {
        rel = Check::fail("relation", "h(Q)h(X) = q h(X)h(Q)", format!("vacuous comparison at depth {rdepth}"));
    }
    report.push(rel.with_depth(rdepth));

    Ok(DeformationReport {
        candidate: cand.to_string(),
        algebra: cand.spec().name().to_string(),
        convention,
        depth,
        report,
        residual,
    })
}

/// The scalar `c` such that deformations must satisfy `ef = c fe`,
/// together with the matching convention.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationDescriptor {
    pub nilpotency_order: u32,
    pub c: ScalarQ,
    pub convention: Convention,
    pub residual: String,
    pub depth: ModelDepth,
}

/// Runs the generic candidate `e = 1 + eps`, `f = phi` over the free
/// algebra with `eps^k = phi^k = 0` and reads the forced relation off the
/// residual of `h(Q)h(X) - λ h(X)h(Q)`.
pub fn derive_commutation_relation(nilpotency_order: u32, depth: ModelDepth) -> Result<RelationDescriptor, DeformError> {
    let spec = catalog::free_nilpotent(nilpotency_order);
    let model = GaloisHullModel::new(&spec, depth)?;
    let lambda = model.ambient_scalar()?;
    let eps = spec.g("eps");
    let phi = spec.g("phi");
    let cand = DeformationCandidate::new(&spec.one() + &eps, phi.clone())?;
    let (hq, hx) = model.images(&cand)?;
    let residual_series = hq.times(&hx).minus(&hx.times(&hq).scale(&lambda));

    let r0 = model
        .entry(&residual_series, 0, 0, 0)
        .ok_or_else(|| DeformError::Inconclusive("depth too small".into()))?;
    let word = |w: &[&str]| crate::ncalg::nc_normalize(model.spec(), w).expect("generators exist");
    let ep = word(&["eps", "phi"]);
    let pe = word(&["phi", "eps"]);
    let key = |x: &NCElement| x.terms().next().map(|(w, _)| w.clone()).unwrap();
    let a = r0.coefficient(&key(&ep));
    let b = r0.coefficient(&key(&pe));
    if a.is_zero() {
        return Err(DeformError::Inconclusive(format!("residual {r0} has no eps*phi term")));
    }
    let c = -&(&b / &a);
    let (e, f) = (model.embed(cand.e())?, model.embed(cand.f())?);
    let expected = &(&e * &f) - &(&f * &e).scale(&c);
    if r0 != expected.scale(&a) {
        return Err(DeformError::Inconclusive(format!("residual {r0} is not a multiple of ef - ({c}) fe")));
    }
    // the whole residual must be (ef - c fe) Q^2
    let q = model.q_seq();
    let full = model.constant(&(&(cand.e() * cand.f()) - &(cand.f() * cand.e()).scale(&c)))?.times(&q).times(&q);
    let (eq, d) = residual_series.agree(&full.scale(&a));
    if !eq || d.is_vacuous() {
        return Err(DeformError::Inconclusive(format!("residual is not (ef - c fe) Q^2 at depth {d}")));
    }
    let convention = convention_for(&c).ok_or_else(|| DeformError::Inconclusive(format!("c = {c} is neither q nor 1/q")))?;
    Ok(RelationDescriptor {
        nilpotency_order,
        c,
        convention,
        residual: r0.to_string(),
        depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_relations_hold() {
        let model = GaloisHullModel::new(&catalog::a1(), ModelDepth::new(4, 5)).unwrap();
        assert_eq!(model.ambient_scalar().unwrap(), ScalarQ::q());
        let q = model.q_seq();
        assert!(model.sigma(&q).agree(&q.scale(&ScalarQ::q())).0);
        assert!(model.theta(1, &q).is_zero());
        assert!(model.d_dw(&q).is_zero());
        assert!(model.d_dw(&model.x()).is_zero());
        assert!(!model.d_dw(&model.t_big()).is_zero());
    }

    #[test]
    fn identity_candidate_passes() {
        let cand = DeformationCandidate::identity(&catalog::a3());
        let r = check_deformation(&cand, ModelDepth::new(4, 6)).unwrap();
        assert!(r.pass(), "{:?}", r.report);
        assert_eq!(r.convention, Convention::EfQFe);
    }

    #[test]
    fn free_algebra_candidate_fails_with_residual() {
        let spec = catalog::a3();
        let cand = DeformationCandidate::new(&spec.one() + &spec.g("eps"), spec.g("phi")).unwrap();
        let r = check_deformation(&cand, ModelDepth::new(4, 6)).unwrap();
        assert!(!r.pass());
        assert!(!r.report.find("relation").unwrap().pass);
        assert_eq!(r.residual.as_deref(), Some("(-q + 1)*phi + eps*phi - q*phi*eps"));
    }

    #[test]
    fn derived_relation_is_ef_equals_q_fe() {
        let d = derive_commutation_relation(2, ModelDepth::small()).unwrap();
        assert_eq!(d.c, ScalarQ::q());
        assert_eq!(d.convention, Convention::EfQFe);
        assert_eq!(d.convention, Convention::default());
    }
}
