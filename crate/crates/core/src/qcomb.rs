//! q-integers, q-factorials, Gaussian binomials and symmetric q-brackets.
//!
//! `qint(0)` is the empty sum 0 while `qfact(0)` is 1. Any other choice
//! breaks the Gaussian binomial formula and makes `Θ^(1)` nonzero on
//! constants.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::One;

use crate::report::{CheckAccumulator, Report};

use crate::scalar::{ScalarError, ScalarQ};

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint(n: u32) -> ScalarQ {
    ScalarQ::from_coeffs(&vec![1; n as usize])
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn qfact(n: u32) -> ScalarQ {
    (1..=n).fold(ScalarQ::one(), |acc, k| &acc * &qint(k))
}

/// Gaussian binomial `[i+j]_q! / ([i]_q! [j]_q!)`.
pub fn qbinom(i: u32, j: u32) -> ScalarQ {
    &qfact(i + j) / &(&qfact(i) * &qfact(j))
}

/// Symmetric bracket `(q^n - q^-n) / (q - q^-1)`.
pub fn qsym(n: i64) -> ScalarQ {
    let num = &ScalarQ::q_pow(n) - &ScalarQ::q_pow(-n);
    let den = &ScalarQ::q() - &ScalarQ::q_pow(-1);
    &num / &den
}

/// `[n]_s` for a scalar `s` in place of `q`; `qint_at(n, 1) = n`.
pub fn qint_at(n: u32, s: &ScalarQ) -> ScalarQ {
    let mut acc = ScalarQ::zero();
    let mut pow = ScalarQ::one();
    for _ in 0..n {
        acc = &acc + &pow;
        pow = &pow * s;
    }
    acc
}

pub fn qfact_at(n: u32, s: &ScalarQ) -> ScalarQ {
    (1..=n).fold(ScalarQ::one(), |acc, k| &acc * &qint_at(k, s))
}

/// Binomial with `s` in place of `q`, via the q-Pascal recursion so that
/// it is defined even when `s` is a root of unity.
pub fn qbinom_at(i: u32, j: u32, s: &ScalarQ) -> ScalarQ {
    let mut row = vec![ScalarQ::one(); j as usize + 1];
    for a in 1..=i {
        let mut next = vec![ScalarQ::one(); j as usize + 1];
        for b in 1..=j as usize {
            // C(a, b) = C(a-1, b) + s^a C(a, b-1)
            let sa = s.powi(a as i64).expect("nonnegative power");
            next[b] = &row[b] + &(&sa * &next[b - 1]);
        }
        row = next;
    }
    row[j as usize].clone()
}

/// Substitutes `q := r`; see [`ScalarQ::eval_at`].
pub fn eval_at(s: &ScalarQ, r: &BigRational) -> Result<BigRational, ScalarError> {
    s.eval_at(r)
}

/// Gaussian binomials for `i + j <= max_sum`: integer polynomials with
/// non-negative coefficients, the q-Pascal rule, and classical values at
/// `q = 1`.
pub fn verify_qcomb(max_sum: u32) -> Report {
    let mut report = Report::new("q-combinatorics");
    report.note(format!("all i, j with i + j <= {max_sum}"));
    let mut positive = CheckAccumulator::new("nonnegative-polynomial", "qbinom(i, j) is in N[q]");
    let mut pascal = CheckAccumulator::new("q-pascal", "qbinom(i, j) = qbinom(i-1, j) + q^i qbinom(i, j-1)");
    let mut classical = CheckAccumulator::new("classical-limit", "qbinom(i, j) at q = 1 is C(i+j, i)");
    let one = BigRational::one();
    for i in 0..=max_sum {
        for j in 0..=max_sum - i {
            let b = qbinom(i, j);
            positive.require(
                b.is_polynomial() && b.numerator().coeffs().iter().all(|c| c.sign() != Sign::Minus),
                || format!("qbinom({i}, {j}) = {b}"),
            );
            if i > 0 && j > 0 {
                let rhs = &qbinom(i - 1, j) + &(&ScalarQ::q_pow(i as i64) * &qbinom(i, j - 1));
                pascal.compare(|| format!("i={i}, j={j}"), &b, &rhs);
            }
            let c = (1..=i).fold(BigInt::one(), |acc, k| acc * BigInt::from(j + k) / BigInt::from(k));
            match b.eval_at(&one) {
                Ok(v) => classical.require(v == BigRational::from_integer(c.clone()), || format!("qbinom({i}, {j})(1) = {v}, expected {c}")),
                Err(e) => classical.require(false, || format!("qbinom({i}, {j}): {e}")),
            }
        }
    }
    for acc in [positive, pascal, classical] {
        report.push(acc.finish());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn small_values() {
        assert_eq!(qint(0), ScalarQ::zero());
        assert_eq!(qint(1), ScalarQ::one());
        assert_eq!(qint(3), ScalarQ::from_coeffs(&[1, 1, 1]));
        assert_eq!(qfact(0), ScalarQ::one());
        assert_eq!(qfact(2), ScalarQ::from_coeffs(&[1, 1]));
        assert_eq!(qfact(3), &qint(3) * &qint(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(qbinom(1, 1), ScalarQ::from_coeffs(&[1, 1]));
        assert_eq!(qbinom(2, 1), ScalarQ::from_coeffs(&[1, 1, 1]));
        for n in 0..6 {
            assert_eq!(qbinom(0, n), ScalarQ::one());
        }
        assert_eq!(qbinom(2, 2), ScalarQ::from_coeffs(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn symmetric_brackets() {
        assert_eq!(qsym(0), ScalarQ::zero());
        assert_eq!(qsym(1), ScalarQ::one());
        assert_eq!(qsym(2), &ScalarQ::from_coeffs(&[1, 0, 1]) / &ScalarQ::q());
        assert_eq!(qsym(-2), -qsym(2));
    }

    #[test]
    fn classical_limits() {
        assert_eq!(eval_at(&qsym(2), &rat(1)).unwrap(), rat(2));
        assert_eq!(eval_at(&qint(3), &rat(1)).unwrap(), rat(3));
        assert_eq!(eval_at(&qbinom(1, 1), &rat(2)).unwrap(), rat(3));
    }

    #[test]
    fn specialized_variants_agree_with_generic() {
        let q = ScalarQ::q();
        for i in 0..5 {
            assert_eq!(qint_at(i, &q), qint(i));
            assert_eq!(qfact_at(i, &q), qfact(i));
            for j in 0..5 {
                assert_eq!(qbinom_at(i, j, &q), qbinom(i, j));
            }
        }
        let one = ScalarQ::one();
        assert_eq!(qbinom_at(3, 2, &one), ScalarQ::from_int(10));
        assert!(qfact_at(4, &one).as_rational().unwrap() == rat(24));
        assert!(qint_at(0, &one).as_rational().unwrap() != BigRational::one());
    }

    #[test]
    fn binomial_suite_passes() {
        assert!(verify_qcomb(12).all_pass());
    }
}
