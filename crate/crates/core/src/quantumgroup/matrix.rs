use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ncalg::{NCAlgebraSpec, NCElement, NcError, NILPOTENCY_SEARCH_LIMIT};
use crate::scalar::ScalarQ;

/// Which way round the q-commutation of a point `[[e, f], [0, 1]]` is
/// written, with parameter `p` (`q` or `q^-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub enum Convention {
    /// `ef = p fe`: the relation forced on deformations `Q -> eQ`,
    /// `X -> fQ + X` by `QX = q XQ`.
    #[default]
    EfQFe,
    /// `p ef = fe`: the relation of the points of `h_q` with `e = u`,
    /// `f = v`.
    QEfFe,
}

impl Convention {
    pub fn mirror(self) -> Self {
        match self {
            Convention::EfQFe => Convention::QEfFe,
            Convention::QEfFe => Convention::EfQFe,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Convention::EfQFe => "ef=q·fe",
            Convention::QEfFe => "q·ef=fe",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `ef - p fe` or `p ef - fe`; zero exactly when the relation holds.
pub fn relation_residual(e: &NCElement, f: &NCElement, convention: Convention, p: &ScalarQ) -> NCElement {
    let ef = e * f;
    let fe = f * e;
    match convention {
        Convention::EfQFe => &ef - &fe.scale(p),
        Convention::QEfFe => &ef.scale(p) - &fe,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HqError {
    #[error("entries are not mutually commutative: {0}")]
    NotMutuallyCommutative(String),
    #[error("not a valid point: {0}")]
    InvalidPoint(String),
    #[error("matrices use different conventions or parameters")]
    ConventionMismatch,
    #[error("inverse check failed: {0}")]
    InverseMismatch(String),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// `[[e, f], [0, 1]]` with `e` invertible, `f` nilpotent and the
/// q-commutation of `convention` at parameter `param`.
#[derive(Clone, PartialEq)]
pub struct HqMatrix {
    e: NCElement,
    f: NCElement,
    param: ScalarQ,
    convention: Convention,
    infinitesimal: bool,
}

impl HqMatrix {
    /// A point at parameter `q`.
    pub fn new(e: NCElement, f: NCElement, convention: Convention) -> Result<Self, HqError> {
        Self::with_param(e, f, convention, ScalarQ::q(), false)
    }

    /// With `infinitesimal`, `e - 1` must also be nilpotent.
    pub fn with_param(
        e: NCElement,
        f: NCElement,
        convention: Convention,
        param: ScalarQ,
        infinitesimal: bool,
    ) -> Result<Self, HqError> {
        let z = HqMatrix {
            e,
            f,
            param,
            convention,
            infinitesimal,
        };
        z.validate()?;
        Ok(z)
    }

    /// Skips validation.
    pub fn unchecked(e: NCElement, f: NCElement, convention: Convention, param: ScalarQ) -> Self {
        HqMatrix {
            e,
            f,
            param,
            convention,
            infinitesimal: false,
        }
    }

    pub fn identity(spec: &Arc<NCAlgebraSpec>, convention: Convention) -> Self {
        Self::unchecked(spec.one(), spec.zero(), convention, ScalarQ::q())
    }

    fn validate(&self) -> Result<(), HqError> {
        if !self.e.same_algebra(&self.f) {
            return Err(NcError::SpecMismatch.into());
        }
        self.e
            .invert()
            .map_err(|_| HqError::InvalidPoint(format!("e = {} is not invertible", self.e)))?;
        if self.infinitesimal {
            let n = &self.e - &self.e.spec().one();
            if !n.is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT))? {
                return Err(HqError::InvalidPoint(format!("e - 1 = {n} is not nilpotent")));
            }
        }
        if !self.f.is_nilpotent(Some(NILPOTENCY_SEARCH_LIMIT))? {
            return Err(HqError::InvalidPoint(format!("f = {} is not nilpotent", self.f)));
        }
        let r = self.residual();
        if !r.is_zero() {
            return Err(HqError::InvalidPoint(format!(
                "{} fails with residual {r}",
                self.convention
            )));
        }
        Ok(())
    }

    pub fn e(&self) -> &NCElement {
        &self.e
    }

    pub fn f(&self) -> &NCElement {
        &self.f
    }

    pub fn param(&self) -> &ScalarQ {
        &self.param
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.infinitesimal
    }

    pub fn spec(&self) -> &Arc<NCAlgebraSpec> {
        self.e.spec()
    }

    pub fn is_identity(&self) -> bool {
        self.e.is_one() && self.f.is_zero()
    }

    pub fn residual(&self) -> NCElement {
        relation_residual(&self.e, &self.f, self.convention, &self.param)
    }

    /// Whether the entries satisfy the relation for another convention or
    /// parameter.
    pub fn satisfies(&self, convention: Convention, param: &ScalarQ) -> bool {
        relation_residual(&self.e, &self.f, convention, param).is_zero()
    }

    /// The first nonzero commutator between `{e, f}` and `{other.e, other.f}`.
    pub fn commutation_witness(&self, other: &Self) -> Result<Option<String>, HqError> {
        for (x, xn) in [(&self.e, "e1"), (&self.f, "f1")] {
            for (y, yn) in [(&other.e, "e2"), (&other.f, "f2")] {
                let c = x.commutator(y)?;
                if !c.is_zero() {
                    return Ok(Some(format!("[{xn}, {yn}] = {c}")));
                }
            }
        }
        Ok(None)
    }

    /// Entries of the plain 2x2 product.
    pub fn product_entries(&self, other: &Self) -> (NCElement, NCElement) {
        (&self.e * &other.e, &(&self.e * &other.f) + &self.f)
    }

    /// `Z1 Z2`, defined when the entries of the factors commute mutually.
    pub fn mul(&self, other: &Self) -> Result<Self, HqError> {
        if !self.e.same_algebra(&other.e) {
            return Err(NcError::SpecMismatch.into());
        }
        if self.convention != other.convention || self.param != other.param {
            return Err(HqError::ConventionMismatch);
        }
        if let Some(w) = self.commutation_witness(other)? {
            return Err(HqError::NotMutuallyCommutative(w));
        }
        let (e, f) = self.product_entries(other);
        Self::with_param(e, f, self.convention, self.param.clone(), self.infinitesimal && other.infinitesimal)
    }

    /// `(e^-1, -e^-1 f)` without any checks on the result.
    pub fn raw_inverse(&self) -> Result<(NCElement, NCElement), HqError> {
        let einv = self.e.invert()?;
        let f = -&(&einv * &self.f);
        Ok((einv, f))
    }

    /// The inverse matrix, a point for the inverted parameter.
    pub fn inverse(&self) -> Result<Self, HqError> {
        let (e, f) = self.raw_inverse()?;
        let inv = Self::unchecked(e, f, self.convention, self.param.inv().expect("nonzero parameter"));
        for (name, (pe, pf)) in [("Z~Z", inv.product_entries(self)), ("ZZ~", self.product_entries(&inv))] {
            if !pe.is_one() || !pf.is_zero() {
                return Err(HqError::InverseMismatch(format!("{name} = [[{pe}, {pf}], [0, 1]]")));
            }
        }
        inv.validate()?;
        Ok(HqMatrix {
            infinitesimal: self.infinitesimal,
            ..inv
        })
    }
}

pub fn hq_matrix_mul(z1: &HqMatrix, z2: &HqMatrix) -> Result<HqMatrix, HqError> {
    z1.mul(z2)
}

pub fn hq_matrix_inverse(z: &HqMatrix) -> Result<HqMatrix, HqError> {
    z.inverse()
}

impl fmt::Display for HqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [0, 1]]", self.e, self.f)
    }
}

impl fmt::Debug for HqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} ({}, p = {})", self.convention, self.param)
    }
}
