use std::fmt;

use super::SeqError;
use crate::ratfunc::RatFunc;
use crate::ring::{Certify, Depth, Difference, QAlgebra, Ring};
use crate::scalar::ScalarQ;

/// The values `f(0), ..., f(M-1)` of a sequence `N -> R`.
///
/// Ring operations are pointwise and keep the shorter window. `σ` is the
/// shift `(Σf)(n) = f(n+1)`.
#[derive(Clone)]
pub struct SeqWindow<R> {
    values: Vec<R>,
    /// Zero of `R`, kept so that empty windows still know their ring.
    proto: R,
}

impl<R: Ring> SeqWindow<R> {
    /// Panics on an empty vector; use [`SeqWindow::with_proto`] for those.
    pub fn new(values: Vec<R>) -> Self {
        let proto = values.first().expect("nonempty window").zero_like();
        SeqWindow { values, proto }
    }

    pub fn with_proto(proto: &R, values: Vec<R>) -> Self {
        SeqWindow {
            values,
            proto: proto.zero_like(),
        }
    }

    pub fn from_fn(proto: &R, m: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::with_proto(proto, (0..m).map(f).collect())
    }

    /// The constant sequence `c` on a window of length `m`.
    pub fn constant(c: R, m: usize) -> Self {
        let proto = c.zero_like();
        SeqWindow {
            values: vec![c; m],
            proto,
        }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn window(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.values.get(n)
    }

    pub fn proto(&self) -> &R {
        &self.proto
    }

    pub fn shift(&self) -> Result<Self, SeqError> {
        if self.values.is_empty() {
            return Err(SeqError::EmptyWindow);
        }
        Ok(SeqWindow {
            values: self.values[1..].to_vec(),
            proto: self.proto.clone(),
        })
    }

    /// First `m` entries.
    pub fn truncate(&self, m: usize) -> Self {
        SeqWindow {
            values: self.values.iter().take(m).cloned().collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn map<S: Ring>(&self, proto: &S, f: impl Fn(&R) -> S) -> SeqWindow<S> {
        SeqWindow::with_proto(proto, self.values.iter().map(f).collect())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        SeqWindow {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| f(a, b)).collect(),
            proto: self.proto.clone(),
        }
    }

    /// Two-row display: indices over values.
    pub fn matrix(&self) -> String
    where
        R: fmt::Display,
    {
        let cells: Vec<(String, String)> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| (i.to_string(), v.to_string()))
            .collect();
        let mut top = String::from("[");
        let mut bottom = String::from("[");
        for (i, (a, b)) in cells.iter().enumerate() {
            let w = a.chars().count().max(b.chars().count());
            let sep = if i == 0 { " " } else { "  " };
            top.push_str(&format!("{sep}{a:<w$}"));
            bottom.push_str(&format!("{sep}{b:<w$}"));
        }
        top.push_str(" ]");
        bottom.push_str(" ]");
        format!("{top}\n{bottom}")
    }
}

/// `(Σf)(n) = f(n+1)`.
pub fn seq_shift<R: Ring>(f: &SeqWindow<R>) -> Result<SeqWindow<R>, SeqError> {
    f.shift()
}

/// `Q = [1, q, q^2, ...]` over K(t).
pub fn q_sequence(m: usize) -> SeqWindow<RatFunc> {
    q_sequence_in(&RatFunc::zero(), m)
}

/// `Q` with values in the ring of `proto`.
pub fn q_sequence_in<R: QAlgebra>(proto: &R, m: usize) -> SeqWindow<R> {
    let one = proto.one_like();
    SeqWindow::from_fn(proto, m, |n| {
        one.scale(&ScalarQ::q_pow(n as i64))
    })
}

impl<R: Ring> PartialEq for SeqWindow<R> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl<R: Ring> fmt::Debug for SeqWindow<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

/// Compact `[f(0), f(1), ...]`; the alternate flag gives the two-row form.
impl<R: Ring + fmt::Display> fmt::Display for SeqWindow<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            return f.write_str(&self.matrix());
        }
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<R: Ring> Ring for SeqWindow<R> {
    fn zero_like(&self) -> Self {
        SeqWindow::constant(self.proto.clone(), self.window())
    }
    fn one_like(&self) -> Self {
        SeqWindow::constant(self.proto.one_like(), self.window())
    }
    fn is_zero(&self) -> bool {
        self.values.iter().all(Ring::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::plus)
    }
    fn negate(&self) -> Self {
        SeqWindow {
            values: self.values.iter().map(Ring::negate).collect(),
            proto: self.proto.clone(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::times)
    }
}

impl<R: QAlgebra> QAlgebra for SeqWindow<R> {
    fn scale(&self, c: &ScalarQ) -> Self {
        SeqWindow {
            values: self.values.iter().map(|v| v.scale(c)).collect(),
            proto: self.proto.clone(),
        }
    }
}

impl<R: QAlgebra> Difference for SeqWindow<R> {
    /// The shift; an empty window stays empty.
    fn sigma(&self) -> Self {
        self.shift().unwrap_or_else(|_| self.clone())
    }
}

impl<R: Certify> Certify for SeqWindow<R> {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        let m = self.window().min(other.window());
        let mut depth = Depth {
            window: Some(m),
            ..Depth::exact()
        };
        let mut equal = true;
        for (a, b) in self.values.iter().zip(&other.values) {
            let (e, d) = a.agree(b);
            equal &= e;
            depth = depth.meet(d);
        }
        (equal, depth)
    }
}
