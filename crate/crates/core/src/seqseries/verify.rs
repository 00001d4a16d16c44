use super::{euler, hopf_morphism, seq_shift, taylor, ts_mul, ts_sigma, ts_theta, Derivation, TwistedSeries};
use crate::qsifield::QsiStructure;
use crate::ratfunc::RatFunc;
use crate::report::{Check, CheckAccumulator, Report};
use crate::ring::Ring;
use crate::scalar::ScalarQ;

/// `ι(t) = tQ + X`, `ι(t^2) = ι(t)ι(t)`, multiplicativity on all sample
/// pairs, and equivariance for `Σ` and `Θ^(i)`.
pub fn verify_hopf_morphism(samples: &[RatFunc], n: usize, m: usize) -> Report {
    let mut report = Report::new("hopf-morphism");
    report.note(format!("series order N={n}, window M={m}"));
    let t = RatFunc::t();
    let it = hopf_morphism(&t, n, m);
    let q = TwistedSeries::constant(super::q_sequence(m), n);
    let x = TwistedSeries::x(&super::q_sequence(m), n);
    let tq = q.map(&super::q_sequence(m), |w| w.map(&RatFunc::zero(), |c| c * &t));
    report.push(Check::compare("iota-t", "iota(t) = tQ + X", &it, &tq.plus(&x)));
    let it2 = hopf_morphism(&(&t * &t), n, m);
    let sq = ts_mul(&it, &it).expect("same order");
    report.push(Check::compare("iota-t-squared", "iota(t^2) = iota(t) iota(t)", &it2, &sq));

    let s = QsiStructure::canonical();
    let mut mult = CheckAccumulator::new("multiplicative", "iota(ab) = iota(a) iota(b)");
    let mut sig = CheckAccumulator::new("sigma-equivariant", "Sigma iota(a) = iota(sigma a)");
    let mut th = CheckAccumulator::new("theta-equivariant", "Theta^(i) iota(a) = iota(theta^(i) a)");
    for a in samples {
        let ia = hopf_morphism(a, n, m);
        for b in samples {
            let ib = hopf_morphism(b, n, m);
            mult.compare(|| format!("a = {a}, b = {b}"), &hopf_morphism(&(a * b), n, m), &ts_mul(&ia, &ib).expect("same order"));
        }
        sig.compare(|| format!("a = {a}"), &ts_sigma(&ia), &hopf_morphism(&a.sigma(), n, m));
        for i in 1..n.min(3) {
            th.compare(|| format!("a = {a}, i = {i}"), &ts_theta(i, &ia), &hopf_morphism(&s.theta(i, a), n, m));
        }
    }
    for acc in [mult, sig, th] {
        report.push(acc.finish());
    }
    report
}

/// `d/dX ∘ ι = ι ∘ δ` for `d/dy` and `y d/dy`, multiplicativity, and the
/// coefficients `y/k!` of the image of `y` under `y d/dy` up to
/// `exp_order`.
pub fn verify_taylor(samples: &[RatFunc], n: usize, exp_order: usize) -> Report {
    let mut report = Report::new("taylor");
    report.note(format!("order {n}, order {exp_order} for y exp(X); the variable of K(y) is printed as t"));
    let mut diff = CheckAccumulator::new("differential", "d/dX iota(a) = iota(delta a)");
    let mut mult = CheckAccumulator::new("multiplicative", "iota(ab) = iota(a) iota(b)");
    for d in [Derivation::D, Derivation::Euler] {
        for a in samples {
            let ta = taylor(a, d, n);
            diff.compare(|| format!("{d:?}, a = {a}"), &ta.derivative(), &taylor(&d.apply(a), d, n));
            for b in samples {
                mult.compare(|| format!("{d:?}, a = {a}, b = {b}"), &taylor(&(a * b), d, n), &ta.times(&taylor(b, d, n)));
            }
        }
    }
    report.push(diff.finish());
    report.push(mult.finish());

    let y = RatFunc::t();
    let n = exp_order;
    let ty = taylor(&y, Derivation::Euler, n);
    let mut exp = CheckAccumulator::new("y-exp-x", "iota(y) = sum y X^k / k!");
    let mut fact = ScalarQ::one();
    for k in 0..n {
        if k > 0 {
            fact = &fact * &ScalarQ::from_int(k as i64);
        }
        let expected = y.scale(&fact.inv().unwrap());
        exp.require(ty.coeff(k) == expected, || format!("k = {k}: {} != {expected}", ty.coeff(k)));
    }
    report.push(exp.finish());
    report.push(Check::compare("taylor-ode", "dY/dX = Y for Y = iota(y)", &ty.derivative(), &ty.truncate(n.saturating_sub(1))));
    report
}

/// `u[σ a] = shift(u[a])` and `u[ab] = u[a] u[b]`.
pub fn verify_euler(samples: &[RatFunc], m: usize) -> Report {
    let mut report = Report::new("euler");
    report.note(format!("window M={m}"));
    let mut shift = CheckAccumulator::new("intertwines-shift", "u[sigma a] = shift(u[a])");
    let mut mult = CheckAccumulator::new("multiplicative", "u[ab] = u[a] u[b]");
    for a in samples {
        let ua = euler(a, m);
        match seq_shift(&ua) {
            Ok(s) => shift.compare(|| format!("a = {a}"), &s, &euler(&a.sigma(), m)),
            Err(e) => shift.require(false, || format!("a = {a}: {e}")),
        }
        for b in samples {
            mult.compare(|| format!("a = {a}, b = {b}"), &euler(&(a * b), m), &ua.times(&euler(b, m)));
        }
    }
    report.push(shift.finish());
    report.push(mult.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsifield::default_samples;

    #[test]
    fn suites_pass_on_default_samples() {
        let s = default_samples();
        for r in [verify_hopf_morphism(&s[..3], 5, 8), verify_taylor(&s, 6, 11), verify_euler(&s, 6)] {
            assert!(r.all_pass(), "{}: {:?}", r.suite, r.failures().collect::<Vec<_>>());
        }
    }
}
