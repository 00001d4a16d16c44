mod common;

use common::{point_entries, point_params, points_algebra};
use proptest::prelude::*;
use qgalois::quantumgroup::{
    antipode_closed_form, hq_antipode, hq_delta, hq_matrix_inverse, hq_matrix_mul, hq_mul, verify_hopf_axioms,
    Convention, HopfQElement, HqError, HqMatrix,
};
use qgalois::scalar::ScalarQ;

fn element() -> impl Strategy<Value = HopfQElement> {
    prop::collection::vec((-2i64..=2, 0u32..=2, -3i64..=3), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(HopfQElement::zero(), |acc, (a, b, c)| {
            acc.add(&HopfQElement::monomial(a, b).scale(&ScalarQ::from_int(c)))
        })
    })
}

/// `v^b u^a = q^(ab) u^a v^b`, checked without the rewriting engine.
#[test]
fn monomial_reordering() {
    for a in -2i64..=2 {
        for b in 0u32..=3 {
            let lhs = hq_mul(&HopfQElement::v().pow(b), &HopfQElement::monomial(a, 0));
            let rhs = HopfQElement::monomial(a, b).scale(&ScalarQ::q_pow(a * b as i64));
            assert_eq!(lhs, rhs, "a={a} b={b}");
        }
    }
}

/// `S(v) = -u^-1 v`, `S(u) = u^-1` from `Δ(u) = u⊗u`, `Δ(v) = v⊗1 + u⊗v`.
#[test]
fn antipode_on_generators() {
    assert_eq!(hq_antipode(&HopfQElement::u()), HopfQElement::uinv());
    assert_eq!(hq_antipode(&HopfQElement::v()), HopfQElement::monomial(-1, 1).scale(&ScalarQ::from_int(-1)));
    assert_eq!(antipode_closed_form(0, 1), hq_antipode(&HopfQElement::v()));
}

#[test]
fn hopf_axioms_hold_on_a_box() {
    let r = verify_hopf_axioms(2, 2);
    assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(hq_mul(&hq_mul(&a, &b), &c), hq_mul(&a, &hq_mul(&b, &c)));
    }

    #[test]
    fn coproduct_is_multiplicative(a in element(), b in element()) {
        prop_assert_eq!(hq_delta(&hq_mul(&a, &b)), hq_delta(&a).mul(&hq_delta(&b)));
    }

    #[test]
    fn antipode_reverses_products(a in element(), b in element()) {
        prop_assert_eq!(hq_antipode(&hq_mul(&a, &b)), hq_mul(&hq_antipode(&b), &hq_antipode(&a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn inverse_is_two_sided_at_inverted_parameter(p in point_params()) {
        let spec = points_algebra(1);
        let (e, f) = point_entries(&spec, 0, &p);
        let z = HqMatrix::new(e, f, Convention::default()).unwrap();
        let zi = hq_matrix_inverse(&z).unwrap();
        prop_assert_eq!(zi.param(), &ScalarQ::q_pow(-1));
        prop_assert!(zi.satisfies(Convention::default(), &ScalarQ::q_pow(-1)));
        prop_assert!(!zi.satisfies(Convention::default(), &ScalarQ::q()) || zi.f().is_zero());
        let (e1, f1) = z.product_entries(&zi);
        prop_assert!(e1.is_one() && f1.is_zero());
        let (e2, f2) = zi.product_entries(&z);
        prop_assert!(e2.is_one() && f2.is_zero());
    }

    #[test]
    fn commuting_products_stay_on_the_group(p1 in point_params(), p2 in point_params()) {
        let spec = points_algebra(2);
        let (e1, f1) = point_entries(&spec, 0, &p1);
        let (e2, f2) = point_entries(&spec, 1, &p2);
        let z1 = HqMatrix::new(e1.clone(), f1.clone(), Convention::default()).unwrap();
        let z2 = HqMatrix::new(e2.clone(), f2.clone(), Convention::default()).unwrap();
        let z = hq_matrix_mul(&z1, &z2).unwrap();
        prop_assert_eq!(z.e(), &(&e1 * &e2));
        prop_assert_eq!(z.f(), &(&(&e1 * &f2) + &f1));
        prop_assert!(z.residual().is_zero());
    }

    #[test]
    fn non_commuting_entries_are_rejected(p in point_params()) {
        let spec = points_algebra(1);
        let (e, f) = point_entries(&spec, 0, &p);
        prop_assume!(!f.is_zero());
        let z = HqMatrix::new(e, f, Convention::default()).unwrap();
        prop_assert!(matches!(hq_matrix_mul(&z, &z), Err(HqError::NotMutuallyCommutative(_))));
    }
}
