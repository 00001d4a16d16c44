use qgalois_cli::*;

fn run(req: SuiteRequest) -> qgalois::report::Report {
    run_suite(&req).unwrap_or_else(|e| panic!("{}: {e}", req.suite))
}

#[test]
fn hopf_axioms_on_small_box() {
    let r = run(SuiteRequest {
        bounds: (2, 2),
        ..SuiteRequest::new(SuiteName::HopfAxioms)
    });
    assert!(r.all_pass(), "{}", render_text(&r));
}

#[test]
fn identity_deformation_passes() {
    let r = run(SuiteRequest::new(SuiteName::Deform));
    assert!(r.all_pass(), "{}", render_text(&r));
}

#[test]
fn planted_violator_fails_with_residual() {
    let r = run(SuiteRequest {
        algebra: Some("A1".into()),
        e: Some("1 + eps".into()),
        f: Some("eps".into()),
        ..SuiteRequest::new(SuiteName::Deform)
    });
    assert!(!r.all_pass());
    assert!(r.find("relation").is_some_and(|c| !c.pass && c.witness.is_some()));
}

#[test]
fn heine_reports_each_n() {
    let r = run(SuiteRequest {
        order: Some(12),
        ..SuiteRequest::new(SuiteName::Heine)
    });
    assert!(r.all_pass(), "{}", render_text(&r));
    let per_n = r.checks.iter().filter(|c| c.name.starts_with("qdiff-n=")).count();
    assert_eq!(per_n, 11);
}

#[test]
fn every_suite_runs_and_passes_by_default() {
    for name in SuiteName::ALL {
        let r = run(SuiteRequest::new(name));
        assert!(r.all_pass(), "{}", render_text(&r));
        assert_eq!(r.suite, name.as_str());
        let names: Vec<_> = r.checks.iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn unknown_suite_is_rejected() {
    assert_eq!(
        "hopf".parse::<SuiteName>(),
        Err(SuiteError::UnknownSuite("hopf".into()))
    );
}

#[test]
fn bad_parameters_are_errors() {
    let bad_gamma = SuiteRequest {
        gamma: 0,
        ..SuiteRequest::new(SuiteName::Heine)
    };
    assert!(matches!(run_suite(&bad_gamma), Err(SuiteError::Qhyper(_))));
    let bad_rational = SuiteRequest {
        a: "q".into(),
        ..SuiteRequest::new(SuiteName::Hypergeom)
    };
    assert!(matches!(run_suite(&bad_rational), Err(SuiteError::BadParameter(_))));
    let bad_expr = SuiteRequest {
        exprs: vec!["t +".into()],
        ..SuiteRequest::new(SuiteName::Euler)
    };
    assert!(matches!(run_suite(&bad_expr), Err(SuiteError::Parse { .. })));
}

#[test]
fn reports_are_deterministic() {
    for name in [SuiteName::MatrixLemmas, SuiteName::Torsor, SuiteName::Deform] {
        let a = ReportDocument::new(run(SuiteRequest::new(name)), None).to_json();
        let b = ReportDocument::new(run(SuiteRequest::new(name)), None).to_json();
        assert_eq!(a, b);
        assert!(!a.contains("timestamp"));
    }
}

#[test]
fn json_schema_fields() {
    let doc = ReportDocument::new(run(SuiteRequest::new(SuiteName::ThetaTable)), Some(7));
    let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["timestamp"], 7);
    assert_eq!(v["summary"]["failed"], 0);
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "anchor", "pass", "depth", "witness"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}
