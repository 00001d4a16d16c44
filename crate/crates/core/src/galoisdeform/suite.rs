use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::model::{check_deformation, derive_commutation_relation, DeformationCandidate, ModelDepth};
use super::torsor::{act, derive_action_order, transporter, ActionOrder};
use super::DeformError;
use crate::ncalg::{catalog, nc_normalize};
use crate::quantumgroup::{random_point, relation_residual, Convention, HqMatrix};
use crate::report::{Check, CheckAccumulator, Report};
use crate::scalar::ScalarQ;

fn candidate_grid() -> Result<Vec<DeformationCandidate>, DeformError> {
    let mut out = Vec::new();
    for spec in [catalog::a1(), catalog::a2(), catalog::a3()] {
        let w = |x: &[&str]| nc_normalize(&spec, x).expect("generators exist");
        let one = spec.one();
        let es = [one.clone(), &one + &w(&["eps"]), &one + &w(&["phi"]), (&one + &w(&["eps"])).scale(&ScalarQ::from_int(2))];
        let fs = [spec.zero(), w(&["phi"]), w(&["eps"]), w(&["eps", "phi"]), w(&["phi", "eps"])];
        for e in &es {
            for f in &fs {
                // f = eps*phi is not nilpotent in the free algebra
                if let Ok(c) = DeformationCandidate::new(e.clone(), f.clone()) {
                    out.push(c);
                }
            }
        }
    }
    let b = catalog::quantum_points(1, 2, &ScalarQ::q());
    out.push(DeformationCandidate::new(b.g("u0"), b.g("v0"))?);
    out.push(DeformationCandidate::new(b.g("uinv0"), (&b.g("u0") * &b.g("v0")).scale(&ScalarQ::from_int(3)))?);
    Ok(out)
}

/// The relation is derived at nilpotency orders 2 and 3; the model then
/// accepts exactly the catalog candidates satisfying it.
pub fn verify_relation_oracle(depth: ModelDepth) -> Result<Report, DeformError> {
    let mut report = Report::new("derive-relation");
    let d2 = derive_commutation_relation(2, depth)?;
    let d3 = derive_commutation_relation(3, depth)?;
    report.note(format!(
        "derived relation {} (c = {}); mirror convention {} holds at 1/q",
        d2.convention,
        d2.c,
        d2.convention.mirror()
    ));
    report.note(format!("generic residual at order 2: {}", d2.residual));
    let valid_c = |c: &ScalarQ| *c == ScalarQ::q() || *c == ScalarQ::q_pow(-1);
    report.push(Check::from_bool("relation-order-2", "c in {q, 1/q} at nilpotency 2", valid_c(&d2.c), || {
        format!("c = {}", d2.c)
    }));
    report.push(Check::from_bool("relation-order-3", "c in {q, 1/q} at nilpotency 3", valid_c(&d3.c), || {
        format!("c = {}", d3.c)
    }));
    report.push(Check::from_bool("relation-consistent", "same c at orders 2 and 3", d2.c == d3.c, || {
        format!("{} vs {}", d2.c, d3.c)
    }));
    report.push(Check::from_bool(
        "relation-is-default",
        "derived convention is the library default",
        d2.convention == Convention::default(),
        || format!("derived {}, default {}", d2.convention, Convention::default()),
    ));

    let c = d2.c.clone();
    let mut exact = CheckAccumulator::new("accepts-exactly-valid", "check_deformation passes iff ef = c fe");
    let mut accepted = 0;
    for cand in candidate_grid()? {
        let oracle = relation_residual(cand.e(), cand.f(), Convention::EfQFe, &c).is_zero();
        let r = check_deformation(&cand, depth)?;
        accepted += usize::from(r.pass());
        exact.require(r.pass() == oracle, || format!("{cand:?}: model {}, relation {oracle}", r.pass()));
    }
    exact.require(accepted > 0, || "no candidate was accepted".into());
    report.push(exact.finish());

    let a3 = catalog::a3();
    let planted = DeformationCandidate::new(&a3.one() + &a3.g("eps"), a3.g("phi"))?;
    let r = check_deformation(&planted, depth)?;
    let anchor = "(1 + eps, phi) is rejected with a residual";
    let check = match (&r.residual, r.pass()) {
        (Some(res), false) if res != "0" => {
            report.note(format!("planted violator residual: {res}"));
            Check::pass("planted-violator", anchor)
        }
        _ => Check::fail("planted-violator", anchor, format!("{:?}", r.report)),
    };
    report.push(check);
    Ok(report)
}

/// Identity action, transporter round trips and compatibility of the
/// action with the matrix product, on `pairs` seeded random points.
pub fn verify_torsor(pairs: usize, seed: u64) -> Result<Report, DeformError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = catalog::quantum_points(3, 2, &ScalarQ::q());
    let order = derive_action_order()?;
    let mut report = Report::new("torsor");
    report.note(format!("act(h, g) = g o h; derived order {order:?}, mirror {:?}", order.mirror()));
    report.push(Check::from_bool(
        "action-order",
        "act(act(c, g1), g2) = act(c, g2 g1)",
        order == ActionOrder::GroupOnLeft,
        || format!("{order:?}"),
    ));
    let mut ident = CheckAccumulator::new("identity-action", "act(c, I) = c");
    let mut round = CheckAccumulator::new("transporter-round-trip", "act(c1, transporter(c1, c2)) = c2");
    let mut compat = CheckAccumulator::new("action-compatibility", "act(act(c, g1), g2) = act(c, g2 g1)");
    let mut valid = CheckAccumulator::new("action-preserves-deformations", "act(c, g) passes check_deformation");
    let id = HqMatrix::identity(&spec, Convention::default());
    let cand = |z: HqMatrix| DeformationCandidate::new(z.e().clone(), z.f().clone());
    for _ in 0..pairs {
        let c1 = cand(random_point(&mut rng, &spec, 0)?)?;
        let g1 = random_point(&mut rng, &spec, 1)?;
        let g2 = random_point(&mut rng, &spec, 2)?;
        ident.require(act(&c1, &id)? == c1, || format!("{c1}"));
        let c2 = act(&c1, &g1)?;
        valid.require(check_deformation(&c2, ModelDepth::small())?.pass(), || format!("{c2}"));
        match transporter(&c1, &c2) {
            Ok(g) => {
                let back = act(&c1, &g)?;
                round.require(back == c2, || format!("{c1} -> {back}, expected {c2}"));
            }
            Err(e) => round.require(false, || format!("{c1} -> {c2}: {e}")),
        }
        let lhs = act(&c2, &g2)?;
        let rhs = act(&c1, &g2.mul(&g1)?)?;
        compat.require(lhs == rhs, || format!("{lhs} vs {rhs}"));
    }
    for acc in [ident, round, compat, valid] {
        report.push(acc.finish());
    }
    Ok(report)
}
