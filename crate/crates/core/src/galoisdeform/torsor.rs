use serde::Serialize;

use super::model::{DeformationCandidate, GaloisHullModel, ModelDepth};
use super::DeformError;
use crate::ncalg::catalog;
use crate::quantumgroup::{Convention, HqMatrix};
use crate::ring::{Certify, Ring};
use crate::scalar::ScalarQ;

/// How the action composes with the matrix product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ActionOrder {
    /// `act(act(c, g1), g2) = act(c, g2 g1)`.
    GroupOnLeft,
    /// `act(act(c, g1), g2) = act(c, g1 g2)`.
    GroupOnRight,
}

impl ActionOrder {
    pub fn mirror(self) -> Self {
        match self {
            ActionOrder::GroupOnLeft => ActionOrder::GroupOnRight,
            ActionOrder::GroupOnRight => ActionOrder::GroupOnLeft,
        }
    }
}

/// `outer ∘ inner`: `outer` applied, as an `A`-linear map, to the images
/// of `inner`. Computed in the model and read off the result.
pub fn compose(outer: &DeformationCandidate, inner: &DeformationCandidate) -> Result<DeformationCandidate, DeformError> {
    let model = GaloisHullModel::new(outer.spec(), ModelDepth::small())?;
    let (gq, gx) = model.images(outer)?;
    let cq = model.constant(inner.e())?.times(&gq);
    let cx = model.constant(inner.f())?.times(&gq).plus(&gx);
    let read = |s| model.entry(s, 0, 0, 0).unwrap_or_else(|| model.spec().zero());
    let (e, f) = (read(&cq), read(&cx));
    let e = e.transport(outer.spec())?;
    let f = f.transport(outer.spec())?;
    let result = DeformationCandidate::new(e, f)?;
    // the composite must again have the shape eQ, fQ + X
    let (rq, rx) = model.images(&result)?;
    if !cq.agree(&rq).0 || !cx.agree(&rx).0 {
        return Err(DeformError::Inconclusive(format!("composite is not of the form eQ, fQ + X: {cq}; {cx}")));
    }
    Ok(result)
}

fn as_candidate(g: &HqMatrix) -> Result<DeformationCandidate, DeformError> {
    DeformationCandidate::new(g.e().clone(), g.f().clone())
}

/// The deformation `g ∘ h`: `e' = e e_g`, `f' = f e_g + f_g`.
pub fn act(cand: &DeformationCandidate, g: &HqMatrix) -> Result<DeformationCandidate, DeformError> {
    if !cand.e().same_algebra(g.e()) {
        return Err(crate::ncalg::NcError::SpecMismatch.into());
    }
    if g.convention() != Convention::default() || *g.param() != ScalarQ::q() {
        return Err(DeformError::InvalidGroupPoint(format!(
            "expected {} at parameter q, got {} at {}",
            Convention::default(),
            g.convention(),
            g.param()
        )));
    }
    if !g.residual().is_zero() {
        return Err(DeformError::InvalidGroupPoint(format!("{g} has residual {}", g.residual())));
    }
    for (x, xn) in [(cand.e(), "e"), (cand.f(), "f")] {
        for (y, yn) in [(g.e(), "e_g"), (g.f(), "f_g")] {
            let c = x.commutator(y)?;
            if !c.is_zero() {
                return Err(DeformError::NotMutuallyCommutative(format!("[{xn}, {yn}] = {c}")));
            }
        }
    }
    compose(&as_candidate(g)?, cand)
}

/// The `g` with `act(c1, g) = c2`: `e_g = e1^-1 e2`, `f_g = f2 - f1 e_g`.
pub fn transporter(c1: &DeformationCandidate, c2: &DeformationCandidate) -> Result<HqMatrix, DeformError> {
    if !c1.e().same_algebra(c2.e()) {
        return Err(crate::ncalg::NcError::SpecMismatch.into());
    }
    let e1inv = c1.e().invert()?;
    let eg = &e1inv * c2.e();
    let fg = c2.f() - &(c1.f() * &eg);
    let g = HqMatrix::new(eg.clone(), fg.clone(), Convention::default())
        .map_err(|e| DeformError::NoTransporter(format!("[[{eg}, {fg}], [0, 1]] is not a point: {e}")))?;
    let back = act(c1, &g).map_err(|e| DeformError::NoTransporter(e.to_string()))?;
    if back != *c2 {
        return Err(DeformError::NoTransporter(format!("act(c1, g) = {back}, expected {c2}")));
    }
    Ok(g)
}

/// Decides the order by acting with three mutually commuting points.
pub fn derive_action_order() -> Result<ActionOrder, DeformError> {
    let spec = catalog::quantum_points(3, 2, &ScalarQ::q());
    let point = |i: usize, s: i64| {
        let (u, _, v) = catalog::point_names(i);
        HqMatrix::new(spec.g(&u), spec.g(&v).scale(&ScalarQ::from_int(s)), Convention::default())
    };
    let g0 = point(0, 1)?;
    let c = DeformationCandidate::new(g0.e().clone(), g0.f().clone())?;
    let (g1, g2) = (point(1, 2)?, point(2, 3)?);
    let lhs = act(&act(&c, &g1)?, &g2)?;
    let left = act(&c, &g2.mul(&g1)?)?;
    let right = act(&c, &g1.mul(&g2)?)?;
    match (lhs == left, lhs == right) {
        (true, false) => Ok(ActionOrder::GroupOnLeft),
        (false, true) => Ok(ActionOrder::GroupOnRight),
        _ => Err(DeformError::Inconclusive(format!(
            "act(act(c, g1), g2) = {lhs}; g2 g1 gives {left}; g1 g2 gives {right}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galoisdeform::check_deformation;

    #[test]
    fn action_order_is_left() {
        assert_eq!(derive_action_order().unwrap(), ActionOrder::GroupOnLeft);
    }

    #[test]
    fn identity_acts_trivially() {
        let spec = catalog::quantum_points(2, 2, &ScalarQ::q());
        let c = DeformationCandidate::new(spec.g("u0"), spec.g("v0")).unwrap();
        let id = HqMatrix::identity(&spec, Convention::default());
        assert_eq!(act(&c, &id).unwrap(), c);
        let g = HqMatrix::new(spec.g("u1"), spec.g("v1"), Convention::default()).unwrap();
        let moved = act(&DeformationCandidate::identity(&spec), &g).unwrap();
        assert_eq!(moved, DeformationCandidate::new(spec.g("u1"), spec.g("v1")).unwrap());
        let c2 = act(&c, &g).unwrap();
        assert!(check_deformation(&c2, ModelDepth::new(3, 4)).unwrap().pass());
        assert_eq!(transporter(&c, &c2).unwrap(), g);
        assert!(transporter(&c, &c).unwrap().is_identity());
    }

    #[test]
    fn non_commuting_action_is_rejected() {
        let spec = catalog::quantum_points(1, 2, &ScalarQ::q());
        let c = DeformationCandidate::new(spec.g("u0"), spec.g("v0")).unwrap();
        let g = HqMatrix::new(spec.g("u0"), spec.g("v0"), Convention::default()).unwrap();
        assert!(matches!(act(&c, &g), Err(DeformError::NotMutuallyCommutative(_))));
    }
}
