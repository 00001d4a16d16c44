use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qgalois::qcomb::qsym;
use qgalois::qhyper::*;
use qgalois::scalar::ScalarQ;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rising factorial `(x)_n`.
fn rising(x: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, k| acc * (x + rat(k as i64)))
}

fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, k| acc * rat(k as i64))
}

#[test]
fn hypergeom_matches_closed_form() {
    let (a, b, c) = (rat(1) / rat(2), rat(-3) / rat(4), rat(5) / rat(3));
    let f = hypergeom(&a, &b, &c, 10).unwrap();
    for n in 0..10 {
        let expected = rising(&a, n) * rising(&b, n) / (rising(&c, n) * factorial(n));
        assert_eq!(f.coeffs()[n], expected, "n={n}");
    }
}

#[test]
fn ode_holds_to_z9() {
    let r = verify_hypergeom_ode(&rat(1), &rat(2), &rat(3), 12).unwrap();
    assert_eq!(r.checks.len(), 10);
    assert!(r.all_pass());
}

#[test]
fn corrupted_series_fails_at_matching_degrees() {
    let (a, b, c) = (rat(1), rat(2), rat(3));
    let f = hypergeom(&a, &b, &c, 12).unwrap();
    let bad = f.with_coeff(2, &f.coeffs()[2] + rat(1));
    let res = ode_residual(&bad, &a, &b, &c);
    let nonzero: Vec<usize> = res.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(n, _)| n).collect();
    // c_2 enters the z^1 coefficient through c_(n+1) and the z^2 one through c_n
    assert_eq!(nonzero, vec![1, 2]);
}

#[test]
fn heine_recurrence_holds() {
    let r = verify_heine_qdiff(1, 2, 3, 12).unwrap();
    assert_eq!(r.checks.len(), 11);
    assert!(r.all_pass());
}

#[test]
fn perturbed_heine_fails_locally() {
    let phi = heine(1, 2, 3, 12).unwrap();
    let bad = phi.with_coeff(1, &phi.coeffs()[1] + &ScalarQ::one());
    let report = qdiff_report(&bad, 1, 2, 3);
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, vec!["qdiff-n=00", "qdiff-n=01"]);
}

#[test]
fn first_coefficient_matches_display() {
    assert!(verify_first_heine_coefficient(1, 2, 3).unwrap().pass);
    // [1]*[2]*/([3]*[1]*) = (q + q^-1)/(q^2 + 1 + q^-2)
    let expected = &(&ScalarQ::q() + &ScalarQ::q_pow(-1)) / &(&(&ScalarQ::q_pow(2) + &ScalarQ::one()) + &ScalarQ::q_pow(-2));
    assert_eq!(heine(1, 2, 3, 2).unwrap().coeffs()[1], expected);
}

#[test]
fn degeneration_over_grid() {
    assert!(verify_degeneration(&degeneration_grid(), 10).unwrap().pass);
}

#[test]
fn diagonal_action_is_certified() {
    assert!(verify_diagonal_action(10, -3..=3).pass);
}

#[test]
fn heine_rejects_bad_gamma() {
    assert!(heine(1, 1, 0, 3).is_err());
    assert!(verify_heine_qdiff(1, 1, -1, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn heine_has_no_pole_at_one(a in -3i64..=4, b in -3i64..=4, g in 1i64..=4) {
        let phi = heine(a, b, g, 8).unwrap();
        for c in phi.coeffs() {
            prop_assert!(c.eval_at(&BigRational::one()).is_ok());
        }
    }

    #[test]
    fn symmetric_bracket_is_invariant_under_q_inverse(n in -6i64..=6) {
        let s = qsym(n);
        prop_assert_eq!(s.substitute(&ScalarQ::q_pow(-1)).unwrap(), s.clone());
        prop_assert_eq!(s.eval_at(&BigRational::one()).unwrap(), rat(n));
    }

    #[test]
    fn ode_residual_vanishes_for_rational_parameters(
        a in -4i64..=4, b in -4i64..=4, cn in 1i64..=6, cd in 1i64..=3,
    ) {
        let c = rat(cn) / rat(cd);
        let f = hypergeom(&rat(a), &rat(b), &c, 10).unwrap();
        prop_assert!(ode_residual(&f, &rat(a), &rat(b), &c).iter().all(|r| r.is_zero()));
        prop_assert!(BigRational::zero() == f.coeffs()[0].clone() - BigRational::one());
    }
}
