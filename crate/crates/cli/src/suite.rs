//! Suite requests and dispatch to the library verifiers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use qgalois::galoisdeform::{
    check_deformation, derive_commutation_relation, differential_example_check, verify_relation_oracle,
    verify_torsor, DeformError, DeformationCandidate, ModelDepth,
};
use qgalois::ncalg::{catalog, NCAlgebraSpec};
use qgalois::qcomb::verify_qcomb;
use qgalois::qhyper::{verify_first_heine_coefficient, verify_heine_qdiff, verify_hypergeom_ode, QhyperError};
use qgalois::qsifield::{check_qsi_axioms, default_samples, verify_theta_table, QsiStructure};
use qgalois::quantumgroup::{structure_witnesses, verify_hopf_axioms, verify_matrix_lemmas, HqError};
use qgalois::ratfunc::RatFunc;
use qgalois::report::{Check, Report, Summary};
use qgalois::seqseries::{
    verify_euler, verify_hopf_morphism, verify_taylor, TwistedAlgebra, TwistedSeries, DEFAULT_M, DEFAULT_N,
};
use serde::Serialize;
use thiserror::Error;

use crate::parse::{parse_element, parse_ratfunc, parse_scalar, ParseError};
use crate::presentation::{parse_presentation, PresentationError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    QsiAxioms,
    TwistedAxioms,
    ThetaTable,
    HopfMorphism,
    HopfAxioms,
    MatrixLemmas,
    Deform,
    DeriveRelation,
    Torsor,
    Heine,
    Hypergeom,
    Taylor,
    Euler,
    Differential,
    QBinomial,
}

impl SuiteName {
    pub const ALL: [SuiteName; 15] = [
        SuiteName::QsiAxioms,
        SuiteName::TwistedAxioms,
        SuiteName::ThetaTable,
        SuiteName::HopfMorphism,
        SuiteName::HopfAxioms,
        SuiteName::MatrixLemmas,
        SuiteName::Deform,
        SuiteName::DeriveRelation,
        SuiteName::Torsor,
        SuiteName::Heine,
        SuiteName::Hypergeom,
        SuiteName::Taylor,
        SuiteName::Euler,
        SuiteName::Differential,
        SuiteName::QBinomial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::QsiAxioms => "qsi-axioms",
            SuiteName::TwistedAxioms => "twisted-axioms",
            SuiteName::ThetaTable => "theta-table",
            SuiteName::HopfMorphism => "hopf-morphism",
            SuiteName::HopfAxioms => "hopf-axioms",
            SuiteName::MatrixLemmas => "matrix-lemmas",
            SuiteName::Deform => "deform",
            SuiteName::DeriveRelation => "derive-relation",
            SuiteName::Torsor => "torsor",
            SuiteName::Heine => "heine",
            SuiteName::Hypergeom => "hypergeom",
            SuiteName::Taylor => "taylor",
            SuiteName::Euler => "euler",
            SuiteName::Differential => "differential",
            SuiteName::QBinomial => "q-binomial",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse `{text}`: {source}")]
    Parse { text: String, source: ParseError },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Deform(#[from] DeformError),
    #[error(transparent)]
    Hq(#[from] HqError),
    #[error(transparent)]
    Qhyper(#[from] QhyperError),
}

fn parsed<T>(text: &str, f: impl FnOnce(&str) -> Result<T, ParseError>) -> Result<T, SuiteError> {
    f(text).map_err(|source| SuiteError::Parse {
        text: text.to_string(),
        source,
    })
}

/// Everything a suite may read; unused fields are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRequest {
    pub suite: SuiteName,
    /// Series order; the suite default when absent.
    pub depth_n: Option<usize>,
    /// Sequence window; the suite default when absent.
    pub depth_m: Option<usize>,
    /// Monomial bounds `|a| <= .0`, `b <= .1` for the Hopf axioms.
    pub bounds: (i64, u32),
    /// Presentation or catalog name.
    pub algebra: Option<String>,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub a: String,
    pub b: String,
    pub c: String,
    /// Operator order, nilpotency order or truncation, per suite.
    pub order: Option<usize>,
    /// Field elements for the morphism and axiom suites.
    pub exprs: Vec<String>,
    pub e: Option<String>,
    pub f: Option<String>,
    /// The constant `c` of the differential example, in the algebra.
    pub constant: Option<String>,
    pub seed: u64,
    pub count: Option<usize>,
    /// Also report the structure witnesses of the Hopf suite.
    pub witnesses: bool,
}

impl SuiteRequest {
    pub fn new(suite: SuiteName) -> Self {
        SuiteRequest {
            suite,
            depth_n: None,
            depth_m: None,
            bounds: (3, 3),
            algebra: None,
            alpha: 1,
            beta: 2,
            gamma: 3,
            a: "1".into(),
            b: "2".into(),
            c: "3".into(),
            order: None,
            exprs: Vec::new(),
            e: None,
            f: None,
            constant: None,
            seed: 20_251_016,
            count: None,
            witnesses: false,
        }
    }

    fn n(&self, default: usize) -> usize {
        self.depth_n.unwrap_or(default)
    }

    fn m(&self, default: usize) -> usize {
        self.depth_m.unwrap_or(default)
    }

    fn algebra_spec(&self, default: &str) -> Result<Arc<NCAlgebraSpec>, SuiteError> {
        Ok(parse_presentation(self.algebra.as_deref().unwrap_or(default))?)
    }

    fn samples(&self) -> Result<Vec<RatFunc>, SuiteError> {
        if self.exprs.is_empty() {
            return Ok(default_samples());
        }
        self.exprs.iter().map(|s| parsed(s, parse_ratfunc)).collect()
    }

    fn rational(&self, text: &str) -> Result<BigRational, SuiteError> {
        parsed(text, parse_scalar)?
            .as_rational()
            .ok_or_else(|| SuiteError::BadParameter(format!("`{text}` is not a rational number")))
    }

    fn model_depth(&self) -> ModelDepth {
        let d = ModelDepth::default();
        ModelDepth {
            n: self.n(d.n),
            m: self.m(d.m),
            ..d
        }
    }
}

/// Series built from consecutive runs of the shipped samples.
fn sample_series(order: usize) -> Vec<TwistedSeries<RatFunc>> {
    let s = default_samples();
    (0..3)
        .map(|k| {
            let coeffs = (0..order).map(|i| s[(k + 2 * i) % s.len()].clone()).collect();
            TwistedSeries::from_coeffs(&RatFunc::zero(), coeffs)
        })
        .collect()
}

fn merge(suite: SuiteName, parts: impl IntoIterator<Item = Report>) -> Report {
    let mut out = Report::new(suite.as_str());
    for p in parts {
        out.extend(p);
    }
    out
}

fn deform(req: &SuiteRequest) -> Result<Report, SuiteError> {
    let spec = req.algebra_spec("A1")?;
    let e = parsed(req.e.as_deref().unwrap_or("1"), |s| parse_element(s, &spec))?;
    let f = parsed(req.f.as_deref().unwrap_or("0"), |s| parse_element(s, &spec))?;
    let cand = DeformationCandidate::new(e, f)?;
    let dr = check_deformation(&cand, req.model_depth())?;
    let mut out = Report::new(SuiteName::Deform.as_str());
    out.note(format!("algebra {}: {}", dr.algebra, spec.presentation()));
    out.note(format!("candidate {}", dr.candidate));
    out.note(format!(
        "relation forced on (e, f): {}; the mirrored convention {} is not assumed",
        dr.convention,
        dr.convention.mirror()
    ));
    out.note(format!("depth {}", dr.depth));
    if let Some(r) = &dr.residual {
        out.note(format!("residual {r}"));
    }
    out.extend(dr.report);
    Ok(out)
}

fn derive_relation(req: &SuiteRequest) -> Result<Report, SuiteError> {
    let depth = req.model_depth();
    let mut out = Report::new(SuiteName::DeriveRelation.as_str());
    let k = req.order.unwrap_or(2) as u32;
    let r = derive_commutation_relation(k, depth)?;
    out.note(format!(
        "nilpotency order {k}: c = {}, relation {}, residual {}",
        r.c, r.convention, r.residual
    ));
    out.extend(verify_relation_oracle(depth)?);
    Ok(out)
}

fn heine(req: &SuiteRequest) -> Result<Report, SuiteError> {
    let n = req.order.unwrap_or(12);
    let (al, be, ga) = (req.alpha, req.beta, req.gamma);
    let mut out = verify_heine_qdiff(al, be, ga, n)?;
    out.push(verify_first_heine_coefficient(al, be, ga)?);
    Ok(out)
}

fn hypergeom(req: &SuiteRequest) -> Result<Report, SuiteError> {
    let (a, b, c) = (req.rational(&req.a)?, req.rational(&req.b)?, req.rational(&req.c)?);
    Ok(verify_hypergeom_ode(&a, &b, &c, req.order.unwrap_or(12))?)
}

fn differential(req: &SuiteRequest) -> Result<Report, SuiteError> {
    let spec = match &req.algebra {
        Some(_) => req.algebra_spec("dual2")?,
        None => catalog::commutative_pair(),
    };
    let c = parsed(req.constant.as_deref().unwrap_or("1 + eps"), |s| parse_element(s, &spec))?;
    Ok(differential_example_check(&c, req.order.unwrap_or(9))?)
}

/// Runs one suite; checks come back sorted by name.
pub fn run_suite(req: &SuiteRequest) -> Result<Report, SuiteError> {
    use SuiteName::*;
    let mut report = match req.suite {
        QsiAxioms => check_qsi_axioms(&QsiStructure::canonical(), &req.samples()?, req.order.unwrap_or(4)),
        TwistedAxioms => {
            let series = sample_series(req.n(6));
            check_qsi_axioms(&TwistedAlgebra::new(), &series, req.order.unwrap_or(5))
        }
        ThetaTable => verify_theta_table(req.order.unwrap_or(6)),
        HopfMorphism => verify_hopf_morphism(&req.samples()?, req.n(DEFAULT_N), req.m(DEFAULT_M)),
        HopfAxioms => {
            let (a, b) = req.bounds;
            if req.witnesses {
                merge(HopfAxioms, [verify_hopf_axioms(a, b), structure_witnesses()])
            } else {
                verify_hopf_axioms(a, b)
            }
        }
        MatrixLemmas => verify_matrix_lemmas(req.count.unwrap_or(20), req.seed)?,
        Deform => deform(req)?,
        DeriveRelation => derive_relation(req)?,
        Torsor => verify_torsor(req.count.unwrap_or(10), req.seed)?,
        Heine => heine(req)?,
        Hypergeom => hypergeom(req)?,
        Taylor => verify_taylor(&req.samples()?, req.n(6), req.order.unwrap_or(11)),
        Euler => verify_euler(&req.samples()?, req.m(DEFAULT_M)),
        Differential => differential(req)?,
        QBinomial => verify_qcomb(req.order.unwrap_or(12) as u32),
    };
    report.suite = req.suite.as_str().to_string();
    report.sort();
    Ok(report)
}

/// The JSON document printed by the binary.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub suite: String,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(report: Report, timestamp: Option<u64>) -> Self {
        let summary = report.summary();
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            timestamp,
            suite: report.suite,
            notes: report.notes,
            checks: report.checks,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn all_pass(&self) -> bool {
        self.summary.total > 0 && self.summary.failed == 0
    }
}

/// Plain-text rendering: one line per check, witnesses indented.
pub fn render_text(report: &Report) -> String {
    let mut out = format!("suite {}\n", report.suite);
    for n in &report.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    for c in &report.checks {
        out.push_str(&format!("  {} {}  [{}]\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.anchor));
        if let Some(d) = &c.depth {
            out.push_str(&format!("       depth {d}\n"));
        }
        if let Some(w) = &c.witness {
            out.push_str(&format!("       witness {w}\n"));
        }
    }
    let s = report.summary();
    out.push_str(&format!("{} checks, {} passed, {} failed\n", s.total, s.passed, s.failed));
    out
}
