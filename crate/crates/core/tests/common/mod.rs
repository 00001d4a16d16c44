#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use qgalois::ncalg::{catalog, NCAlgebraSpec, NCElement};
use qgalois::scalar::ScalarQ;

/// Parameters of a point `e = c u (1 + a v)`, `f = p(u) v` with
/// `p(u) = p0 uinv + p1 + p2 u`.
#[derive(Debug, Clone)]
pub struct PointParams {
    pub c: i64,
    pub a: i64,
    pub p: [i64; 3],
}

pub fn point_params() -> impl Strategy<Value = PointParams> {
    (
        prop_oneof![1i64..=3, -3i64..=-1],
        -2i64..=2,
        prop::array::uniform3(-2i64..=2),
    )
        .prop_map(|(c, a, p)| PointParams { c, a, p })
}

pub fn points_algebra(copies: usize) -> Arc<NCAlgebraSpec> {
    catalog::quantum_points(copies, 2, &ScalarQ::q())
}

/// Entries of the point built on the `i`th copy.
pub fn point_entries(spec: &Arc<NCAlgebraSpec>, i: usize, p: &PointParams) -> (NCElement, NCElement) {
    let (u, uinv, v) = catalog::point_names(i);
    let (u, uinv, v) = (spec.g(&u), spec.g(&uinv), spec.g(&v));
    let k = |n: i64| ScalarQ::from_int(n);
    let e = (&u * &(&spec.one() + &v.scale(&k(p.a)))).scale(&k(p.c));
    let poly = &(&uinv.scale(&k(p.p[0])) + &spec.one().scale(&k(p.p[1]))) + &u.scale(&k(p.p[2]));
    (e, &poly * &v)
}
