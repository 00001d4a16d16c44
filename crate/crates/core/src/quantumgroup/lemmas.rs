use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{Convention, HqError, HqMatrix};
use crate::ncalg::{catalog, NCAlgebraSpec, NCElement};
use crate::report::{CheckAccumulator, Report};
use crate::scalar::ScalarQ;

fn small(rng: &mut impl Rng, lo: i64, hi: i64) -> ScalarQ {
    ScalarQ::from_int(rng.gen_range(lo..=hi))
}

fn nonzero(rng: &mut impl Rng) -> ScalarQ {
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    ScalarQ::from_int(n)
}

/// A point `e = c u (1 + a v)`, `f = (p0 uinv + p1 + p2 u) v` on copy `i`
/// of [`catalog::quantum_points`] at `q`.
pub fn random_point(rng: &mut impl Rng, spec: &Arc<NCAlgebraSpec>, i: usize) -> Result<HqMatrix, HqError> {
    let (u, uinv, v) = catalog::point_names(i);
    let (u, uinv, v) = (spec.g(&u), spec.g(&uinv), spec.g(&v));
    let e = (&u * &(&spec.one() + &v.scale(&small(rng, -2, 2)))).scale(&nonzero(rng));
    let p = &(&uinv.scale(&small(rng, -2, 2)) + &spec.one().scale(&small(rng, -2, 2))) + &u.scale(&small(rng, -2, 2));
    HqMatrix::new(e, &p * &v, Convention::default())
}

/// A point with `f = 0` and `e = c (1 + nilpotent)` in an algebra
/// generated by nilpotents, where no other points exist.
fn random_trivial_point(rng: &mut impl Rng, spec: &Arc<NCAlgebraSpec>) -> Result<HqMatrix, HqError> {
    let mut n = spec.zero();
    for g in spec.generator_names() {
        n = &n + &spec.g(g).scale(&small(rng, -2, 2));
    }
    let e = (&spec.one() + &(&n * &n).scale(&small(rng, -1, 1))).scale(&nonzero(rng));
    let e = &e + &spec.g(spec.generator_names()[0]).scale(&small(rng, -2, 2));
    HqMatrix::new(e, spec.zero(), Convention::default())
}

fn sample(rng: &mut impl Rng, k: usize) -> Result<HqMatrix, HqError> {
    match k % 4 {
        0 => random_trivial_point(rng, &catalog::a1()),
        1 => random_trivial_point(rng, &catalog::commutative_pair()),
        _ => random_point(rng, &catalog::quantum_points(1, 2, &ScalarQ::q()), 0),
    }
}

/// Inverse, product closure and rejection checks on `count` seeded
/// random points.
pub fn verify_matrix_lemmas(count: usize, seed: u64) -> Result<Report, HqError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("matrix-lemmas");
    report.note(format!("{count} random points, seed {seed}, relation {}", Convention::default()));
    let qinv = ScalarQ::q_pow(-1);
    let mut left = CheckAccumulator::new("inverse-left", "Z~ Z = I");
    let mut right = CheckAccumulator::new("inverse-right", "Z Z~ = I");
    let mut param = CheckAccumulator::new("inverse-parameter", "Z~ is a point at 1/q");
    for k in 0..count {
        let z = sample(&mut rng, k)?;
        let (e, f) = z.raw_inverse()?;
        let zi = HqMatrix::unchecked(e, f, z.convention(), qinv.clone());
        let is_id = |(a, b): (NCElement, NCElement)| a.is_one() && b.is_zero();
        left.require(is_id(zi.product_entries(&z)), || format!("Z = {z}"));
        right.require(is_id(z.product_entries(&zi)), || format!("Z = {z}"));
        param.require(zi.satisfies(z.convention(), &qinv), || format!("Z~ = {zi} has residual {}", zi.residual()));
        param.require(z.inverse().is_ok(), || format!("inverse of {z} rejected"));
    }
    report.push(left.finish());
    report.push(right.finish());
    report.push(param.finish());

    let spec = catalog::quantum_points(2, 2, &ScalarQ::q());
    let mut closure = CheckAccumulator::new("product-closure", "Z1 Z2 is a point when entries commute mutually");
    for _ in 0..count {
        let z1 = random_point(&mut rng, &spec, 0)?;
        let z2 = random_point(&mut rng, &spec, 1)?;
        match z1.mul(&z2) {
            Ok(z) => {
                let (e, f) = z1.product_entries(&z2);
                closure.require(z.e() == &e && z.f() == &f, || format!("{z1} * {z2} = {z}"));
            }
            Err(err) => closure.require(false, || format!("{z1} * {z2}: {err}")),
        }
    }
    report.push(closure.finish());

    let mut reject = CheckAccumulator::new("non-commuting-rejected", "products of non-commuting points are refused");
    let a1 = catalog::a1();
    let z1 = HqMatrix::new(&a1.one() + &a1.g("eps"), a1.zero(), Convention::default())?;
    let z2 = HqMatrix::new(&a1.one() + &a1.g("phi"), a1.zero(), Convention::default())?;
    reject.require(matches!(z1.mul(&z2), Err(HqError::NotMutuallyCommutative(_))), || "A1 pair accepted".into());
    let single = catalog::quantum_points(1, 2, &ScalarQ::q());
    let z = HqMatrix::new(single.g("u0"), single.g("v0"), Convention::default())?;
    reject.require(matches!(z.mul(&z), Err(HqError::NotMutuallyCommutative(_))), || format!("{z} * {z} accepted"));
    report.push(reject.finish());
    Ok(report)
}
