use std::sync::Arc;

use super::DeformError;
use crate::ncalg::{NCAlgebraSpec, NCElement, NILPOTENCY_SEARCH_LIMIT};
use crate::ratfunc::RatFunc;
use crate::report::{Check, CheckAccumulator, Report};
use crate::ring::Ring;
use crate::scalar::ScalarQ;
use crate::seqseries::{taylor, Derivation, TaylorPoly};

/// `Y = y exp(X) = Σ y X^k / k!` over `A[y]`, to order `n`.
pub fn y_exp_x(spec_with_y: &Arc<NCAlgebraSpec>, n: usize) -> TaylorPoly<NCElement> {
    let y = spec_with_y.g("y");
    let mut fact = ScalarQ::one();
    let coeffs = (0..n)
        .map(|k| {
            if k > 0 {
                fact = &fact * &ScalarQ::from_int(k as i64);
            }
            y.scale(&fact.inv().unwrap())
        })
        .collect();
    TaylorPoly::from_coeffs(&spec_with_y.zero(), coeffs, "X")
}

/// `y ∂/∂y` on `A[y]` with `y` central: each word is multiplied by its
/// number of `y`s.
fn euler_y(a: &NCElement) -> NCElement {
    let spec = a.spec();
    let y = spec.index_of("y").expect("algebra has y");
    let mut out = spec.zero();
    for (w, c) in a.terms() {
        let k = w.iter().filter(|&&l| l == y).count() as i64;
        let term = NCElement::from_word(spec, w).scale(&(c * &ScalarQ::from_int(k)));
        out = &out + &term;
    }
    out
}

/// `y ↦ c y` on `A[y]`.
fn substitute_y(a: &NCElement, c: &NCElement) -> Result<NCElement, DeformError> {
    let spec = a.spec();
    let y = spec.index_of("y").expect("algebra has y");
    let cy = &c.transport(spec)? * &spec.g("y");
    let mut out = spec.zero();
    for (w, coef) in a.terms() {
        let rest: Vec<u16> = w.iter().copied().filter(|&l| l != y).collect();
        let k = (w.len() - rest.len()) as u32;
        let term = (&NCElement::from_word(spec, &rest) * &cy.pow(k)).scale(coef);
        out = &out + &term;
    }
    Ok(out)
}

/// Checks `y ∂Y/∂y = Y` coefficientwise.
pub fn check_differential_solution(y: &TaylorPoly<NCElement>) -> Check {
    let lhs = y.map(&y.coeff(0).zero_like(), euler_y);
    Check::compare("euler-equation", "y dY/dy = Y", &lhs, y)
}

fn spec_with_y(c: &NCElement) -> Result<Arc<NCAlgebraSpec>, DeformError> {
    Ok(c.spec().with_central("y")?)
}

/// Requires `c - 1` nilpotent and `c` central in `A`.
fn validate_constant(c: &NCElement) -> Result<(), DeformError> {
    let spec = c.spec();
    let n = c - &spec.one();
    if !n.is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT))? {
        return Err(DeformError::InvalidCandidate(format!("{c} - 1 is not nilpotent")));
    }
    for g in spec.generator_names() {
        let k = c.commutator(&spec.g(g))?;
        if !k.is_zero() {
            return Err(DeformError::InvalidCandidate(format!("[{c}, {g}] = {k}")));
        }
    }
    Ok(())
}

/// Composing `y ↦ c1 y` with `y ↦ c2 y` gives `y ↦ c1 c2 y`, and the
/// constants commute.
pub fn differential_group_law(c1: &NCElement, c2: &NCElement, n: usize) -> Result<Check, DeformError> {
    validate_constant(c1)?;
    validate_constant(c2)?;
    let spec = spec_with_y(c1)?;
    let base = y_exp_x(&spec, n);
    let mut acc = CheckAccumulator::new("group-law", "phi_c2(phi_c1(Y)) = (c1 c2) Y and c1 c2 = c2 c1");
    let step1 = substitute_y_series(&base, c1)?;
    let step2 = substitute_y_series(&step1, c2)?;
    let direct = substitute_y_series(&base, &(c1 * c2))?;
    acc.compare(|| "composite".into(), &step2, &direct);
    acc.compare(|| "commutes".into(), &(c1 * c2), &(c2 * c1));
    let unipotent = (&(c1 * c2) - &c1.spec().one()).is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT))?;
    acc.require(unipotent, || format!("({c1})({c2}) - 1 is not nilpotent"));
    Ok(acc.finish())
}

fn substitute_y_series(y: &TaylorPoly<NCElement>, c: &NCElement) -> Result<TaylorPoly<NCElement>, DeformError> {
    let coeffs = y.coeffs().iter().map(|a| substitute_y(a, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(TaylorPoly::from_coeffs(&y.coeff(0).zero_like(), coeffs, y.var_name()))
}

/// The differential analogue: the Taylor image of the solution of
/// `t dy/dt = y` solves `dY/dX = Y`, its deformations `Y ↦ cY` are again
/// solutions, and they compose multiplicatively.
pub fn differential_example_check(c: &NCElement, n: usize) -> Result<Report, DeformError> {
    validate_constant(c)?;
    let mut report = Report::new("differential");
    report.note(format!("order {n}; deformation constant c = {c}"));

    let y = taylor(&RatFunc::t(), Derivation::Euler, n);
    report.push(Check::compare("taylor-ode", "dY/dX = Y for Y = t exp(X)", &y.derivative(), &y.truncate(n.saturating_sub(1))));

    let spec = spec_with_y(c)?;
    let base = y_exp_x(&spec, n);
    report.push(check_differential_solution(&base));
    let deformed = substitute_y_series(&base, c)?;
    let mut solution = check_differential_solution(&deformed);
    solution.name = "deformed-solution".into();
    solution.anchor = "y d(cY)/dy = cY".into();
    report.push(solution);
    let scaled = base.map(&spec.zero(), |a| &c.transport(&spec).expect("same base") * a);
    report.push(Check::compare("deformed-is-scaled", "phi_c(Y) = cY", &deformed, &scaled));
    report.push(differential_group_law(c, c, n)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;

    #[test]
    fn example_passes() {
        let spec = catalog::commutative_pair();
        let c = &spec.one() + &spec.g("eps");
        let r = differential_example_check(&c, 5).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn corrupted_solution_fails() {
        let spec = catalog::commutative_pair().with_central("y").unwrap();
        let y = y_exp_x(&spec, 4);
        let x = TaylorPoly::var(&spec.zero(), 4, "X");
        let bad = y.plus(&x.map(&spec.zero(), |a| a.clone()));
        assert!(check_differential_solution(&y).pass);
        assert!(!check_differential_solution(&bad).pass);
    }

    #[test]
    fn group_law_multiplies_constants() {
        let spec = catalog::commutative_pair();
        let c1 = &spec.one() + &spec.g("eps");
        let c2 = &spec.one() + &spec.g("delta");
        assert!(differential_group_law(&c1, &c2, 4).unwrap().pass);
    }

    #[test]
    fn non_central_constant_is_rejected() {
        let spec = catalog::a3();
        let c = &spec.one() + &spec.g("eps");
        assert!(differential_group_law(&c, &c, 3).is_err());
    }
}
