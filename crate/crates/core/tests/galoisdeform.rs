mod common;

use std::sync::Arc;

use common::{point_entries, point_params, points_algebra};
use proptest::prelude::*;
use qgalois::galoisdeform::{
    act, check_deformation, derive_action_order, derive_commutation_relation, transporter, ActionOrder,
    DeformationCandidate, ModelDepth,
};
use qgalois::ncalg::{catalog, nc_normalize, NCAlgebraSpec, NCElement};
use qgalois::quantumgroup::{hq_matrix_mul, Convention, HqMatrix};
use qgalois::scalar::ScalarQ;

const WORDS: &[&[&str]] = &[
    &["eps"],
    &["phi"],
    &["eps", "phi"],
    &["phi", "eps"],
    &["eps", "phi", "eps"],
    &["phi", "eps", "phi"],
];

fn algebra(i: usize) -> Arc<NCAlgebraSpec> {
    match i {
        0 => catalog::a1(),
        1 => catalog::a2(),
        _ => catalog::a3(),
    }
}

fn combo(spec: &Arc<NCAlgebraSpec>, coeffs: &[i64]) -> NCElement {
    WORDS.iter().zip(coeffs).fold(spec.zero(), |acc, (w, &c)| {
        &acc + &nc_normalize(spec, w).unwrap().scale(&ScalarQ::from_int(c))
    })
}

/// `ef - q fe`, computed directly in the algebra.
fn relation_oracle(e: &NCElement, f: &NCElement) -> NCElement {
    &(e * f) - &(f * e).scale(&ScalarQ::q())
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], WORDS.len())
}

fn depth() -> ModelDepth {
    ModelDepth::new(4, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Over the catalog, the model accepts exactly the candidates with
    /// `ef = q fe`; with `e` unipotent that forces `f = 0`.
    #[test]
    fn model_agrees_with_relation_and_unipotent_forces_zero(
        which in 0usize..3,
        ec in coeffs(),
        fc in coeffs(),
    ) {
        let spec = algebra(which);
        let e = &spec.one() + &combo(&spec, &ec);
        let f = combo(&spec, &fc);
        let cand = match DeformationCandidate::new(e.clone(), f.clone()) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        prop_assert!(cand.is_infinitesimal());
        let oracle = relation_oracle(&e, &f).is_zero();
        let report = check_deformation(&cand, depth()).unwrap();
        prop_assert_eq!(report.pass(), oracle, "{:?}", report.report);
        if oracle {
            prop_assert!(f.is_zero());
        }
    }

    #[test]
    fn points_are_deformations(p in point_params()) {
        let spec = points_algebra(1);
        let (e, f) = point_entries(&spec, 0, &p);
        prop_assert!(relation_oracle(&e, &f).is_zero());
        let cand = DeformationCandidate::new(e, f).unwrap();
        prop_assert!(!cand.is_infinitesimal());
        prop_assert!(check_deformation(&cand, depth()).unwrap().pass());
    }

    #[test]
    fn action_transporter_round_trip(p0 in point_params(), p1 in point_params(), p2 in point_params()) {
        let spec = points_algebra(3);
        let (e0, f0) = point_entries(&spec, 0, &p0);
        let c = DeformationCandidate::new(e0, f0).unwrap();
        let g = |i, p| {
            let (e, f) = point_entries(&spec, i, p);
            HqMatrix::new(e, f, Convention::default()).unwrap()
        };
        let (g1, g2) = (g(1, &p1), g(2, &p2));
        let moved = act(&c, &g1).unwrap();
        prop_assert!(check_deformation(&moved, ModelDepth::small()).unwrap().pass());
        prop_assert_eq!(&transporter(&c, &moved).unwrap(), &g1);
        let twice = act(&moved, &g2).unwrap();
        prop_assert_eq!(twice, act(&c, &hq_matrix_mul(&g2, &g1).unwrap()).unwrap());
    }
}

#[test]
fn derived_relation_matches_default_convention() {
    for k in [2, 3] {
        let d = derive_commutation_relation(k, ModelDepth::small()).unwrap();
        assert_eq!(d.c, ScalarQ::q());
        assert_eq!(d.convention, Convention::default());
        assert_eq!(d.convention, Convention::EfQFe);
    }
}

#[test]
fn action_order_is_derived_as_left() {
    assert_eq!(derive_action_order().unwrap(), ActionOrder::GroupOnLeft);
}

#[test]
fn verdicts_are_stable_in_depth() {
    let points = points_algebra(1);
    let a3 = catalog::a3();
    let cands = vec![
        DeformationCandidate::identity(&catalog::a1()),
        DeformationCandidate::new(points.g("u0"), points.g("v0")).unwrap(),
        DeformationCandidate::new(&a3.one() + &a3.g("eps"), a3.g("phi")).unwrap(),
        DeformationCandidate::new(&a3.one() + &a3.g("eps"), a3.zero()).unwrap(),
    ];
    for c in &cands {
        let shallow = check_deformation(c, ModelDepth::new(6, 10)).unwrap();
        let deep = check_deformation(c, ModelDepth::default()).unwrap();
        assert_eq!(shallow.pass(), deep.pass(), "{c:?}");
        assert_eq!(shallow.residual, deep.residual);
    }
}

#[test]
fn non_point_group_elements_are_rejected() {
    let spec = points_algebra(2);
    let c = DeformationCandidate::identity(&spec);
    let g = HqMatrix::new(spec.g("u1"), spec.g("v1"), Convention::default()).unwrap();
    let wrong = HqMatrix::unchecked(spec.g("u1"), spec.g("v1"), Convention::QEfFe, ScalarQ::q());
    assert!(act(&c, &g).is_ok());
    assert!(act(&c, &wrong).is_err());
}
