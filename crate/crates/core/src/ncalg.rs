//! Finitely presented associative algebras over Q(q) with monomial
//! relations, normalized by rewriting.
//!
//! A presentation has three kinds of relations:
//!
//! * `y*x -> c * x*y` for generators from different families,
//! * `x^k -> 0`,
//! * inverse pairs `u*uinv -> 1`, `uinv*u -> 1`.
//!
//! Generators belong to families ("bases"): a generator and its declared
//! inverse form one family, every other generator is a family of its own.
//! A commutation rule between two families fixes all four sign
//! combinations: if `b*a = k a*b` then `b^s a^r = k^(rs) a^r b^s`.
//!
//! Every rule maps a word to a scalar multiple of a word or to zero, so
//! the normal form of a word is a single term. Local confluence is checked
//! exhaustively on short words when a presentation is built.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::ring::{Certify, Depth, QAlgebra, Ring};
use crate::scalar::{format_terms, ScalarQ};

pub type Word = Vec<u16>;

/// Largest power tried when nilpotency has to be detected by search.
pub const NILPOTENCY_SEARCH_LIMIT: u32 = 48;

const CONFLUENCE_WORD_BUDGET: usize = 250_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("commutation scalar for `{0}` is zero")]
    ZeroScalar(String),
    #[error("conflicting relations between `{0}` and `{1}`")]
    ConflictingRule(String, String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("presentation is not confluent: the word `{word}` has normal forms `{left}` and `{right}`")]
    NotConfluent {
        word: String,
        left: String,
        right: String,
    },
    #[error("elements belong to different algebras")]
    SpecMismatch,
    #[error("element is not a unit: {0}")]
    NotUnit(String),
    #[error("no structural nilpotency bound for `{0}`; supply one")]
    Unbounded(String),
}

#[derive(Debug, Clone)]
struct Letter {
    name: String,
    base: usize,
    sign: i64,
}

#[derive(Debug, Clone)]
struct Base {
    /// Letter index with sign +1 and, for inverse pairs, with sign -1.
    pos: u16,
    neg: Option<u16>,
    nilpotency: Option<u32>,
}

/// A presentation. Cheap to share; elements hold an `Arc` to it.
#[derive(Debug)]
pub struct NCAlgebraSpec {
    id: u64,
    name: String,
    letters: Vec<Letter>,
    bases: Vec<Base>,
    /// `kappa[(lo, hi)] = k` encodes `b_hi b_lo = k b_lo b_hi` for bases `lo < hi`.
    kappa: HashMap<(usize, usize), usize>,
    kappa_values: Vec<ScalarQ>,
}

static NEXT_SPEC_ID: AtomicU64 = AtomicU64::new(1);

/// Collects relations before validation.
#[derive(Debug, Clone, Default)]
pub struct SpecBuilder {
    name: String,
    generators: Vec<String>,
    commutations: Vec<(String, String, ScalarQ)>,
    nilpotencies: Vec<(String, u32)>,
    inverses: Vec<(String, String)>,
    centrals: Vec<String>,
}

impl SpecBuilder {
    pub fn generator(mut self, name: &str) -> Self {
        self.generators.push(name.to_string());
        self
    }

    pub fn generators<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        self.generators.extend(names.into_iter().map(str::to_string));
        self
    }

    /// `y*x -> c * x*y`.
    pub fn commute(mut self, y: &str, x: &str, c: ScalarQ) -> Self {
        self.commutations.push((y.to_string(), x.to_string(), c));
        self
    }

    /// `x^k -> 0`.
    pub fn nilpotent(mut self, x: &str, k: u32) -> Self {
        self.nilpotencies.push((x.to_string(), k));
        self
    }

    /// `a*b -> 1` and `b*a -> 1`; `b` may be undeclared, it is then added
    /// right after `a`.
    pub fn inverse_pair(mut self, a: &str, b: &str) -> Self {
        self.inverses.push((a.to_string(), b.to_string()));
        self
    }

    /// Adds a generator commuting with every other generator.
    pub fn central(mut self, name: &str) -> Self {
        self.centrals.push(name.to_string());
        self
    }

    pub fn build(self) -> Result<Arc<NCAlgebraSpec>, NcError> {
        NCAlgebraSpec::from_builder(self)
    }
}

impl NCAlgebraSpec {
    pub fn builder(name: &str) -> SpecBuilder {
        SpecBuilder {
            name: name.to_string(),
            ..SpecBuilder::default()
        }
    }

    fn from_builder(b: SpecBuilder) -> Result<Arc<Self>, NcError> {
        let mut names: Vec<String> = Vec::new();
        let push_name = |names: &mut Vec<String>, n: &str| -> Result<(), NcError> {
            if names.iter().any(|m| m == n) {
                return Err(NcError::DuplicateGenerator(n.to_string()));
            }
            names.push(n.to_string());
            Ok(())
        };
        for g in &b.generators {
            push_name(&mut names, g)?;
        }
        for (a, inv) in &b.inverses {
            let Some(pos) = names.iter().position(|n| n == a) else {
                return Err(NcError::UnknownGenerator(a.clone()));
            };
            if !names.contains(inv) {
                names.insert(pos + 1, inv.clone());
            }
        }
        for c in &b.centrals {
            push_name(&mut names, c)?;
        }

        let index = |n: &str| names.iter().position(|m| m == n);
        let mut letter_base: Vec<Option<(usize, i64)>> = vec![None; names.len()];
        let mut bases: Vec<Base> = Vec::new();
        for (a, inv) in &b.inverses {
            let ia = index(a).unwrap();
            let ib = index(inv).unwrap();
            if ia == ib || letter_base[ia].is_some() || letter_base[ib].is_some() {
                return Err(NcError::InvalidRelation(format!(
                    "`{a}` and `{inv}` cannot form an inverse pair"
                )));
            }
            letter_base[ia] = Some((usize::MAX, 1));
            letter_base[ib] = Some((usize::MAX, -1));
        }
        // Families are numbered in the order of their first letter.
        for i in 0..names.len() {
            match letter_base[i] {
                Some((usize::MAX, 1)) => {
                    let inv = &b.inverses.iter().find(|(a, _)| a == &names[i]).unwrap().1;
                    let j = index(inv).unwrap();
                    let base = bases.len();
                    bases.push(Base {
                        pos: i as u16,
                        neg: Some(j as u16),
                        nilpotency: None,
                    });
                    letter_base[i] = Some((base, 1));
                    letter_base[j] = Some((base, -1));
                }
                Some((usize::MAX, -1)) => {
                    let a = &b.inverses.iter().find(|(_, x)| x == &names[i]).unwrap().0;
                    let j = index(a).unwrap();
                    let base = bases.len();
                    bases.push(Base {
                        pos: j as u16,
                        neg: Some(i as u16),
                        nilpotency: None,
                    });
                    letter_base[i] = Some((base, -1));
                    letter_base[j] = Some((base, 1));
                }
                Some(_) => {}
                None => {
                    letter_base[i] = Some((bases.len(), 1));
                    bases.push(Base {
                        pos: i as u16,
                        neg: None,
                        nilpotency: None,
                    });
                }
            }
        }
        let letters: Vec<Letter> = names
            .iter()
            .zip(&letter_base)
            .map(|(n, lb)| {
                let (base, sign) = lb.unwrap();
                Letter {
                    name: n.clone(),
                    base,
                    sign,
                }
            })
            .collect();

        for (x, k) in &b.nilpotencies {
            let i = index(x).ok_or_else(|| NcError::UnknownGenerator(x.clone()))?;
            let base = letters[i].base;
            if *k == 0 || bases[base].neg.is_some() {
                return Err(NcError::InvalidRelation(format!("`{x}^{k} = 0`")));
            }
            match bases[base].nilpotency {
                Some(old) if old != *k => {
                    return Err(NcError::ConflictingRule(x.clone(), x.clone()));
                }
                _ => bases[base].nilpotency = Some(*k),
            }
        }

        let mut kappa: HashMap<(usize, usize), usize> = HashMap::new();
        let mut kappa_values: Vec<ScalarQ> = Vec::new();
        let mut add_rule = |y: usize, x: usize, c: &ScalarQ| -> Result<(), NcError> {
            let (ly, lx) = (&letters[y], &letters[x]);
            if c.is_zero() {
                return Err(NcError::ZeroScalar(format!("{}*{}", ly.name, lx.name)));
            }
            if ly.base == lx.base {
                return Err(NcError::InvalidRelation(format!(
                    "`{}` and `{}` belong to the same family",
                    ly.name, lx.name
                )));
            }
            // y x = c x y  =>  with hi/lo bases: b_hi b_lo = k b_lo b_hi
            let s = ly.sign * lx.sign;
            let k = if lx.base < ly.base {
                c.powi(s).unwrap()
            } else {
                c.powi(-s).unwrap()
            };
            let key = (lx.base.min(ly.base), lx.base.max(ly.base));
            match kappa.get(&key) {
                Some(&idx) if kappa_values[idx] != k => {
                    Err(NcError::ConflictingRule(ly.name.clone(), lx.name.clone()))
                }
                Some(_) => Ok(()),
                None => {
                    kappa.insert(key, kappa_values.len());
                    kappa_values.push(k);
                    Ok(())
                }
            }
        };
        for (y, x, c) in &b.commutations {
            let iy = index(y).ok_or_else(|| NcError::UnknownGenerator(y.clone()))?;
            let ix = index(x).ok_or_else(|| NcError::UnknownGenerator(x.clone()))?;
            add_rule(iy, ix, c)?;
        }
        for c in &b.centrals {
            let ic = index(c).unwrap();
            for other in 0..names.len() {
                if letters[other].base != letters[ic].base {
                    add_rule(ic, other, &ScalarQ::one())?;
                }
            }
        }

        let spec = NCAlgebraSpec {
            id: NEXT_SPEC_ID.fetch_add(1, Ordering::Relaxed),
            name: b.name,
            letters,
            bases,
            kappa,
            kappa_values,
        };
        spec.check_local_confluence()?;
        Ok(Arc::new(spec))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.letters.iter().map(|l| l.name.as_str()).collect()
    }

    pub fn num_generators(&self) -> usize {
        self.letters.len()
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.letters.iter().position(|l| l.name == name).map(|i| i as u16)
    }

    pub fn letter_name(&self, i: u16) -> &str {
        &self.letters[i as usize].name
    }

    /// Nilpotency index `k` of a generator with `x^k = 0`.
    pub fn nilpotency(&self, i: u16) -> Option<u32> {
        self.bases[self.letters[i as usize].base].nilpotency
    }

    pub fn inverse_letter(&self, i: u16) -> Option<u16> {
        let l = &self.letters[i as usize];
        let b = &self.bases[l.base];
        if l.sign > 0 {
            b.neg
        } else {
            Some(b.pos)
        }
    }

    /// The scalar `c` with `y*x = c x*y`, if a rule relates the two.
    pub fn commutation(&self, y: u16, x: u16) -> Option<ScalarQ> {
        let (ly, lx) = (&self.letters[y as usize], &self.letters[x as usize]);
        if ly.base == lx.base {
            return if y == x { Some(ScalarQ::one()) } else { None };
        }
        let key = (lx.base.min(ly.base), lx.base.max(ly.base));
        let k = &self.kappa_values[*self.kappa.get(&key)?];
        let s = ly.sign * lx.sign;
        Some(if lx.base < ly.base {
            k.powi(s).unwrap()
        } else {
            k.powi(-s).unwrap()
        })
    }

    fn swap_rule(&self, a: u16, b: u16) -> Option<(usize, i64)> {
        let (la, lb) = (&self.letters[a as usize], &self.letters[b as usize]);
        if la.base <= lb.base {
            return None;
        }
        let idx = *self.kappa.get(&(lb.base, la.base))?;
        Some((idx, la.sign * lb.sign))
    }

    fn cancels(&self, a: u16, b: u16) -> bool {
        let (la, lb) = (&self.letters[a as usize], &self.letters[b as usize]);
        la.base == lb.base && la.sign != lb.sign
    }

    /// Normal form of a word: a scalar multiple of a normal word, or `None`
    /// for zero.
    pub fn normalize_word(&self, word: &[u16]) -> Option<(ScalarQ, Word)> {
        let mut w: Word = word.to_vec();
        let mut exps: Vec<i64> = vec![0; self.kappa_values.len()];
        let mut i = 0;
        while i + 1 < w.len() {
            let (a, b) = (w[i], w[i + 1]);
            if self.cancels(a, b) {
                w.drain(i..i + 2);
                i = i.saturating_sub(1);
            } else if let Some((idx, e)) = self.swap_rule(a, b) {
                w.swap(i, i + 1);
                exps[idx] += e;
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        if self.has_nilpotent_run(&w) {
            return None;
        }
        let mut c = ScalarQ::one();
        for (idx, &e) in exps.iter().enumerate() {
            if e != 0 {
                c = &c * &self.kappa_values[idx].powi(e).unwrap();
            }
        }
        Some((c, w))
    }

    fn has_nilpotent_run(&self, w: &[u16]) -> bool {
        let mut run = 0u32;
        for (i, &x) in w.iter().enumerate() {
            run = if i > 0 && w[i - 1] == x { run + 1 } else { 1 };
            if self.nilpotency(x).is_some_and(|k| run >= k) {
                return true;
            }
        }
        false
    }

    /// All results of applying a single rule somewhere in `word`.
    pub fn one_step_rewrites(&self, word: &[u16]) -> Vec<(ScalarQ, Option<Word>)> {
        let mut out = Vec::new();
        for i in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            if self.cancels(a, b) {
                let mut w = word.to_vec();
                w.drain(i..i + 2);
                out.push((ScalarQ::one(), Some(w)));
            } else if let Some((idx, e)) = self.swap_rule(a, b) {
                let mut w = word.to_vec();
                w.swap(i, i + 1);
                out.push((self.kappa_values[idx].powi(e).unwrap(), Some(w)));
            }
        }
        for i in 0..word.len() {
            if let Some(k) = self.nilpotency(word[i]) {
                let k = k as usize;
                if i + k <= word.len() && word[i..i + k].iter().all(|&x| x == word[i]) {
                    out.push((ScalarQ::one(), None));
                }
            }
        }
        out
    }

    fn check_local_confluence(&self) -> Result<(), NcError> {
        let n = self.letters.len();
        if n == 0 {
            return Ok(());
        }
        let max_k = self.bases.iter().filter_map(|b| b.nilpotency).max().unwrap_or(1) as usize;
        let mut len = 3.max(max_k + 1);
        while len > 3 && (n as f64).powi(len as i32) > CONFLUENCE_WORD_BUDGET as f64 {
            len -= 1;
        }
        let mut word: Word = Vec::new();
        self.confluence_dfs(&mut word, len)
    }

    fn confluence_dfs(&self, word: &mut Word, len: usize) -> Result<(), NcError> {
        if !word.is_empty() {
            let reference = self.normalize_word(word);
            for (c, next) in self.one_step_rewrites(word) {
                let via = next.and_then(|w| self.normalize_word(&w)).map(|(d, w)| (&c * &d, w));
                if via != reference {
                    let show = |r: &Option<(ScalarQ, Word)>| match r {
                        None => "0".to_string(),
                        Some((c, w)) => format!("{c} * {}", self.format_word(w)),
                    };
                    return Err(NcError::NotConfluent {
                        word: self.format_word(word),
                        left: show(&reference),
                        right: show(&via),
                    });
                }
            }
        }
        if word.len() == len {
            return Ok(());
        }
        for x in 0..self.letters.len() as u16 {
            word.push(x);
            let r = self.confluence_dfs(word, len);
            word.pop();
            r?;
        }
        Ok(())
    }

    /// `u^2*v`-style printing with runs collapsed.
    pub fn format_word(&self, w: &[u16]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = self.letter_name(w[i]);
            parts.push(if j - i == 1 {
                name.to_string()
            } else {
                format!("{name}^{}", j - i)
            });
            i = j;
        }
        parts.join("*")
    }

    /// Text form accepted by the CLI presentation parser.
    pub fn presentation(&self) -> String {
        let mut out = format!("gens: {};", self.generator_names().join(", "));
        let mut comm: Vec<String> = Vec::new();
        for (&(lo, hi), &idx) in &self.kappa {
            comm.push(format!(
                "{}*{} -> {} * {}*{}",
                self.letters[self.bases[hi].pos as usize].name,
                self.letters[self.bases[lo].pos as usize].name,
                self.kappa_values[idx],
                self.letters[self.bases[lo].pos as usize].name,
                self.letters[self.bases[hi].pos as usize].name,
            ));
        }
        comm.sort();
        if !comm.is_empty() {
            out.push_str(&format!(" comm: {};", comm.join(", ")));
        }
        let nilp: Vec<String> = self
            .bases
            .iter()
            .filter_map(|b| b.nilpotency.map(|k| format!("{}^{k}", self.letters[b.pos as usize].name)))
            .collect();
        if !nilp.is_empty() {
            out.push_str(&format!(" nilp: {};", nilp.join(", ")));
        }
        let inv: Vec<String> = self
            .bases
            .iter()
            .filter_map(|b| {
                b.neg.map(|n| {
                    format!("{}*{}", self.letters[b.pos as usize].name, self.letters[n as usize].name)
                })
            })
            .collect();
        if !inv.is_empty() {
            out.push_str(&format!(" inv: {};", inv.join(", ")));
        }
        out
    }

    /// Same presentation plus a central generator `name`.
    pub fn with_central(&self, name: &str) -> Result<Arc<NCAlgebraSpec>, NcError> {
        let mut b = NCAlgebraSpec::builder(&format!("{}[{name}]", self.name));
        for base in &self.bases {
            b = b.generator(&self.letters[base.pos as usize].name);
            if let Some(n) = base.neg {
                b = b.inverse_pair(
                    &self.letters[base.pos as usize].name,
                    &self.letters[n as usize].name,
                );
            }
            if let Some(k) = base.nilpotency {
                b = b.nilpotent(&self.letters[base.pos as usize].name, k);
            }
        }
        for (&(lo, hi), &idx) in &self.kappa {
            b = b.commute(
                &self.letters[self.bases[hi].pos as usize].name,
                &self.letters[self.bases[lo].pos as usize].name,
                self.kappa_values[idx].clone(),
            );
        }
        b.central(name).build()
    }

    pub fn one(self: &Arc<Self>) -> NCElement {
        NCElement::scalar(self, ScalarQ::one())
    }

    pub fn zero(self: &Arc<Self>) -> NCElement {
        NCElement::zero(self)
    }

    /// The generator named `name`.
    pub fn gen(self: &Arc<Self>, name: &str) -> Result<NCElement, NcError> {
        let i = self
            .index_of(name)
            .ok_or_else(|| NcError::UnknownGenerator(name.to_string()))?;
        Ok(NCElement::from_word(self, &[i]))
    }

    /// Shorthand for catalog code where the name is known to exist.
    pub fn g(self: &Arc<Self>, name: &str) -> NCElement {
        self.gen(name).expect("generator declared in presentation")
    }
}

/// Normal form of a word given by generator names.
pub fn nc_normalize(spec: &Arc<NCAlgebraSpec>, word: &[&str]) -> Result<NCElement, NcError> {
    let letters = word
        .iter()
        .map(|n| spec.index_of(n).ok_or_else(|| NcError::UnknownGenerator(n.to_string())))
        .collect::<Result<Word, _>>()?;
    Ok(NCElement::from_word(spec, &letters))
}

/// A linear combination of normal words.
#[derive(Clone)]
pub struct NCElement {
    spec: Arc<NCAlgebraSpec>,
    terms: BTreeMap<Word, ScalarQ>,
}

impl PartialEq for NCElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.id == other.spec.id && self.terms == other.terms
    }
}

impl Eq for NCElement {}

impl NCElement {
    pub fn zero(spec: &Arc<NCAlgebraSpec>) -> Self {
        NCElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(spec: &Arc<NCAlgebraSpec>, c: ScalarQ) -> Self {
        let mut e = Self::zero(spec);
        if !c.is_zero() {
            e.terms.insert(Vec::new(), c);
        }
        e
    }

    pub fn from_word(spec: &Arc<NCAlgebraSpec>, word: &[u16]) -> Self {
        let mut e = Self::zero(spec);
        if let Some((c, w)) = spec.normalize_word(word) {
            e.terms.insert(w, c);
        }
        e
    }

    pub fn spec(&self) -> &Arc<NCAlgebraSpec> {
        &self.spec
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        self.spec.id == other.spec.id
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// Coefficient of the empty word.
    pub fn scalar_part(&self) -> ScalarQ {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(ScalarQ::zero)
    }

    pub fn coefficient(&self, word: &[u16]) -> ScalarQ {
        self.terms.get(word).cloned().unwrap_or_else(ScalarQ::zero)
    }

    fn insert(&mut self, w: Word, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, NcError> {
        if !self.same_algebra(other) {
            return Err(NcError::SpecMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, NcError> {
        if !self.same_algebra(other) {
            return Err(NcError::SpecMismatch);
        }
        let mut out = Self::zero(&self.spec);
        let mut buf: Word = Vec::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                buf.clear();
                buf.extend_from_slice(w1);
                buf.extend_from_slice(w2);
                if let Some((c, w)) = self.spec.normalize_word(&buf) {
                    let coef = if c.is_one() { c1 * c2 } else { &(c1 * c2) * &c };
                    out.insert(w, coef);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero(&self.spec);
        }
        NCElement {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&ScalarQ) -> ScalarQ) -> Self {
        let mut out = Self::zero(&self.spec);
        for (w, c) in &self.terms {
            out.insert(w.clone(), f(c));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.spec.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, NcError> {
        Ok(&self.try_mul(other)? - &other.try_mul(self)?)
    }

    /// The same element inside another presentation that declares every
    /// generator used here; the result is renormalized there.
    pub fn transport(&self, target: &Arc<NCAlgebraSpec>) -> Result<NCElement, NcError> {
        let mut out = NCElement::zero(target);
        for (w, c) in &self.terms {
            let mapped = w
                .iter()
                .map(|&x| {
                    let n = self.spec.letter_name(x);
                    target.index_of(n).ok_or_else(|| NcError::UnknownGenerator(n.to_string()))
                })
                .collect::<Result<Word, _>>()?;
            if let Some((d, w2)) = target.normalize_word(&mapped) {
                out.insert(w2, c * &d);
            }
        }
        Ok(out)
    }

    fn contains_nilpotent_letter(&self, w: &[u16]) -> bool {
        w.iter().any(|&x| self.spec.nilpotency(x).is_some())
    }

    /// Sum of `k - 1` over nilpotent families occurring in the element, when
    /// every such family commutes up to a scalar with every other family
    /// occurring; then any word with more nilpotent letters than this bound
    /// vanishes.
    pub fn structural_bound(&self) -> Option<u32> {
        let mut letters: Vec<u16> = self.terms.keys().flatten().copied().collect();
        letters.sort_unstable();
        letters.dedup();
        let mut bases: Vec<usize> = letters.iter().map(|&x| self.spec.letters[x as usize].base).collect();
        bases.sort_unstable();
        bases.dedup();
        let mut bound = 0u32;
        for &b in &bases {
            let Some(k) = self.spec.bases[b].nilpotency else {
                continue;
            };
            for &o in &bases {
                if o != b && !self.spec.kappa.contains_key(&(b.min(o), b.max(o))) {
                    return None;
                }
            }
            bound += k - 1;
        }
        Some(bound)
    }

    /// Whether `a^m = 0` for some `m`.
    ///
    /// Terms without nilpotent letters survive in the quotient by the ideal
    /// of nilpotent generators, which is a domain for this class of
    /// presentations, so they rule out nilpotency. Otherwise the structural
    /// bound decides; without one, `bound` caps the search.
    pub fn is_nilpotent(&self, bound: Option<u32>) -> Result<bool, NcError> {
        if self.is_zero() {
            return Ok(true);
        }
        if self.terms.keys().any(|w| !self.contains_nilpotent_letter(w)) {
            return Ok(false);
        }
        let limit = match (self.structural_bound(), bound) {
            (Some(d), _) => d + 1,
            (None, Some(b)) => b,
            (None, None) => return Err(NcError::Unbounded(self.to_string())),
        };
        let mut p = self.clone();
        for _ in 1..limit {
            if p.is_zero() {
                return Ok(true);
            }
            p = &p * self;
        }
        Ok(p.is_zero())
    }

    /// Smallest `m` with `a^m = 0`, searching up to the structural bound or
    /// [`NILPOTENCY_SEARCH_LIMIT`].
    pub fn nilpotency_index(&self) -> Option<u32> {
        let limit = self
            .structural_bound()
            .map(|d| d + 1)
            .unwrap_or(NILPOTENCY_SEARCH_LIMIT);
        let mut p = self.clone();
        for m in 1..=limit {
            if p.is_zero() {
                return Some(m);
            }
            p = &p * self;
        }
        None
    }

    /// `(c + n)^{-1} = c^{-1} Σ_k (-c^{-1} n)^k` for nonzero scalar `c` and
    /// nilpotent `n`.
    pub fn invert_unipotent(&self) -> Result<NCElement, NcError> {
        let c = self.scalar_part();
        let cinv = c.inv().ok_or_else(|| NcError::NotUnit(self.to_string()))?;
        let n = self - &NCElement::scalar(&self.spec, c);
        let m = -&n.scale(&cinv);
        let inv = geometric_series(&m).ok_or_else(|| NcError::NotUnit(self.to_string()))?;
        Ok(inv.scale(&cinv))
    }

    /// Inverse of `c*w + n` where `w` is a word in invertible generators and
    /// every term of `n` contains a nilpotent letter.
    pub fn invert(&self) -> Result<NCElement, NcError> {
        let not_unit = || NcError::NotUnit(self.to_string());
        let mut leading = self
            .terms
            .iter()
            .filter(|(w, _)| !self.contains_nilpotent_letter(w));
        let (w, c) = leading.next().ok_or_else(not_unit)?;
        if leading.next().is_some() || w.iter().any(|&x| self.spec.inverse_letter(x).is_none()) {
            return Err(not_unit());
        }
        let winv: Word = w.iter().rev().map(|&x| self.spec.inverse_letter(x).unwrap()).collect();
        let cw_inv = NCElement::from_word(&self.spec, &winv).scale(&c.inv().unwrap());
        let m = &(&cw_inv * self) - &self.spec.one();
        let series = geometric_series(&-&m).ok_or_else(not_unit)?;
        let inv = &series * &cw_inv;
        if (&inv * self).is_one() && (self * &inv).is_one() {
            Ok(inv)
        } else {
            Err(not_unit())
        }
    }
}

/// `Σ_k m^k` when `m` is nilpotent.
fn geometric_series(m: &NCElement) -> Option<NCElement> {
    let mut sum = m.spec.one();
    let mut p = m.spec.one();
    for _ in 0..NILPOTENCY_SEARCH_LIMIT {
        p = &p * m;
        if p.is_zero() {
            return Some(sum);
        }
        sum = &sum + &p;
    }
    None
}

pub fn nc_mul(a: &NCElement, b: &NCElement) -> Result<NCElement, NcError> {
    a.try_mul(b)
}

pub fn nc_add(a: &NCElement, b: &NCElement) -> Result<NCElement, NcError> {
    a.try_add(b)
}

pub fn nc_is_nilpotent(a: &NCElement, bound: Option<u32>) -> Result<bool, NcError> {
    a.is_nilpotent(bound)
}

pub fn nc_invert_unipotent(a: &NCElement) -> Result<NCElement, NcError> {
    a.invert_unipotent()
}

impl Add for &NCElement {
    type Output = NCElement;
    fn add(self, rhs: &NCElement) -> NCElement {
        self.try_add(rhs).expect("operands from the same algebra")
    }
}

impl Sub for &NCElement {
    type Output = NCElement;
    fn sub(self, rhs: &NCElement) -> NCElement {
        self + &(-rhs)
    }
}

impl Neg for &NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        NCElement {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &NCElement {
    type Output = NCElement;
    fn mul(self, rhs: &NCElement) -> NCElement {
        self.try_mul(rhs).expect("operands from the same algebra")
    }
}

impl fmt::Display for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let s = format_terms(keys.into_iter().map(|w| (&self.terms[w], self.spec.format_word(w))));
        f.write_str(&s)
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.spec.name)
    }
}

impl Ring for NCElement {
    fn zero_like(&self) -> Self {
        NCElement::zero(&self.spec)
    }
    fn one_like(&self) -> Self {
        self.spec.one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl QAlgebra for NCElement {
    fn scale(&self, c: &ScalarQ) -> Self {
        NCElement::scale(self, c)
    }
}

impl Certify for NCElement {
    fn agree(&self, other: &Self) -> (bool, Depth) {
        (self == other, Depth::exact())
    }
}

/// Standard test algebras.
pub mod catalog {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    /// `eps^2 = phi^2 = 0`, `phi*eps = q eps*phi`.
    pub fn a1() -> Arc<NCAlgebraSpec> {
        NCAlgebraSpec::builder("A1")
            .generators(["eps", "phi"])
            .nilpotent("eps", 2)
            .nilpotent("phi", 2)
            .commute("phi", "eps", q())
            .build()
            .expect("A1 is confluent")
    }

    /// `eps^3 = phi^3 = 0`, `phi*eps = q eps*phi`.
    pub fn a2() -> Arc<NCAlgebraSpec> {
        NCAlgebraSpec::builder("A2")
            .generators(["eps", "phi"])
            .nilpotent("eps", 3)
            .nilpotent("phi", 3)
            .commute("phi", "eps", q())
            .build()
            .expect("A2 is confluent")
    }

    /// `eps^2 = phi^2 = 0` and no relation between them.
    pub fn a3() -> Arc<NCAlgebraSpec> {
        free_nilpotent(2)
    }

    /// `eps^k = phi^k = 0`, otherwise free.
    pub fn free_nilpotent(k: u32) -> Arc<NCAlgebraSpec> {
        NCAlgebraSpec::builder(if k == 2 { "A3" } else { "free" })
            .generators(["eps", "phi"])
            .nilpotent("eps", k)
            .nilpotent("phi", k)
            .build()
            .expect("free nilpotent algebra is confluent")
    }

    /// Commuting `eps`, `delta` with `eps^2 = delta^2 = 0`.
    pub fn commutative_pair() -> Arc<NCAlgebraSpec> {
        NCAlgebraSpec::builder("dual2")
            .generators(["eps", "delta"])
            .nilpotent("eps", 2)
            .nilpotent("delta", 2)
            .commute("delta", "eps", ScalarQ::one())
            .build()
            .expect("commutative pair is confluent")
    }

    /// Generator names `u{i}`, `uinv{i}`, `v{i}` of [`quantum_points`].
    pub fn point_names(i: usize) -> (String, String, String) {
        (format!("u{i}"), format!("uinv{i}"), format!("v{i}"))
    }

    /// `copies` commuting copies of `u_i` (invertible) and `v_i` with
    /// `v_i^nilp = 0` and `u_i v_i = c v_i u_i`. Each `(u_i, v_i)` is a
    /// matrix point for the relation `ef = c fe`.
    pub fn quantum_points(copies: usize, nilp: u32, c: &ScalarQ) -> Arc<NCAlgebraSpec> {
        let mut b = NCAlgebraSpec::builder(&format!("B{copies}"));
        for i in 0..copies {
            let (u, uinv, v) = point_names(i);
            b = b
                .generator(&u)
                .inverse_pair(&u, &uinv)
                .generator(&v)
                .nilpotent(&v, nilp)
                // u v = c v u  <=>  v u = c^-1 u v
                .commute(&v, &u, c.inv().expect("nonzero relation scalar"));
        }
        for i in 0..copies {
            for j in 0..copies {
                if i < j {
                    let (ui, _, vi) = point_names(i);
                    let (uj, _, vj) = point_names(j);
                    for (y, x) in [(&uj, &ui), (&vj, &vi), (&uj, &vi), (&vj, &ui)] {
                        b = b.commute(y, x, ScalarQ::one());
                    }
                }
            }
        }
        b.build().expect("quantum point algebra is confluent")
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    fn hq() -> Arc<NCAlgebraSpec> {
        NCAlgebraSpec::builder("hq")
            .generators(["u", "v"])
            .inverse_pair("u", "uinv")
            .commute("v", "u", q())
            .build()
            .unwrap()
    }

    #[test]
    fn single_rewrite() {
        let s = hq();
        let vu = nc_normalize(&s, &["v", "u"]).unwrap();
        assert_eq!(vu, (&s.g("u") * &s.g("v")).scale(&q()));
        assert!(nc_normalize(&s, &[]).unwrap().is_one());
        // derived rule for the inverse letter
        let vuinv = nc_normalize(&s, &["v", "uinv"]).unwrap();
        assert_eq!(vuinv, (&s.g("uinv") * &s.g("v")).scale(&q().inv().unwrap()));
        assert!(nc_normalize(&s, &["u", "v", "uinv"]).unwrap() == s.g("v").scale(&q().inv().unwrap()));
    }

    #[test]
    fn nilpotent_words_vanish() {
        let a = a1();
        assert!(nc_normalize(&a, &["eps", "eps"]).unwrap().is_zero());
        assert!(nc_normalize(&a, &["eps", "phi", "eps"]).unwrap().is_zero());
        let f = free_nilpotent(2);
        assert!(!nc_normalize(&f, &["eps", "phi", "eps"]).unwrap().is_zero());
    }

    #[test]
    fn unipotent_inverses() {
        let a = a1();
        let one = a.one();
        let eps = a.g("eps");
        assert_eq!(nc_invert_unipotent(&(&one + &eps)).unwrap(), &one - &eps);
        assert!(nc_invert_unipotent(&one).unwrap().is_one());
        let two = NCElement::scalar(&a, ScalarQ::from_int(2));
        let half = ScalarQ::from_int(1) / ScalarQ::from_int(2);
        let quarter = ScalarQ::from_int(1) / ScalarQ::from_int(4);
        let expected = &NCElement::scalar(&a, half) - &eps.scale(&quarter);
        assert_eq!(nc_invert_unipotent(&(&two + &eps)).unwrap(), expected);
        assert!(matches!(
            nc_invert_unipotent(&eps),
            Err(NcError::NotUnit(_))
        ));
    }

    #[test]
    fn nilpotency_predicate() {
        let a = NCAlgebraSpec::builder("ed")
            .generators(["eps", "delta"])
            .nilpotent("eps", 2)
            .nilpotent("delta", 2)
            .commute("delta", "eps", q())
            .build()
            .unwrap();
        assert_eq!(a.g("eps").is_nilpotent(None), Ok(true));
        assert_eq!(a.one().is_nilpotent(None), Ok(false));
        let s = &a.g("eps") + &a.g("delta");
        assert_eq!(s.is_nilpotent(None), Ok(true));
        assert!(!s.pow(2).is_zero());
        assert!(s.pow(4).is_zero());
        let free = a3();
        let x = &free.g("eps") + &free.g("phi");
        assert!(matches!(x.is_nilpotent(None), Err(NcError::Unbounded(_))));
        assert_eq!(x.is_nilpotent(Some(6)), Ok(false));
    }

    #[test]
    fn general_inverse_with_invertible_letters() {
        let b = quantum_points(1, 2, &q());
        let u = b.g("u0");
        let v = b.g("v0");
        let e = &u.scale(&ScalarQ::from_int(3)) + &(&u * &v);
        let inv = e.invert().unwrap();
        assert!((&inv * &e).is_one());
        assert!(matches!(v.invert(), Err(NcError::NotUnit(_))));
        // u v = q v u
        assert_eq!(&u * &v, (&v * &u).scale(&q()));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = a1();
        let b = a1();
        assert_eq!(a.g("eps").try_mul(&b.g("eps")), Err(NcError::SpecMismatch));
    }

    #[test]
    fn conflicting_and_unknown_rules() {
        let r = NCAlgebraSpec::builder("bad")
            .generators(["x", "y"])
            .commute("y", "x", q())
            .commute("x", "y", q())
            .build();
        assert!(matches!(r, Err(NcError::ConflictingRule(_, _))));
        let r = NCAlgebraSpec::builder("bad").generators(["x"]).nilpotent("z", 2).build();
        assert!(matches!(r, Err(NcError::UnknownGenerator(_))));
        let r = NCAlgebraSpec::builder("bad")
            .generators(["x", "y"])
            .commute("y", "x", ScalarQ::zero())
            .build();
        assert!(matches!(r, Err(NcError::ZeroScalar(_))));
    }

    #[test]
    fn printing_and_central_extension() {
        let a = a1();
        let e = &(&a.one() + &a.g("eps")) - &(&a.g("phi") * &a.g("eps"));
        assert_eq!(e.to_string(), "1 + eps - q*eps*phi");
        let ext = a.with_central("t").unwrap();
        let moved = e.transport(&ext).unwrap();
        assert_eq!(&moved * &ext.g("t"), &ext.g("t") * &moved);
        assert!(a.presentation().contains("phi*eps -> q * eps*phi"));
    }
}
