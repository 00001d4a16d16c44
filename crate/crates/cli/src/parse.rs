//! Expression parser shared by every context.
//!
//! ```text
//! expr     = term , { ( "+" | "-" ) , term } ;
//! term     = unary , { ( "*" | "/" ) , unary } ;
//! unary    = "-" , unary | power ;
//! power    = atom , [ "^" , exponent ] ;
//! exponent = [ "-" ] , integer | "(" , [ "-" ] , integer , ")" ;
//! atom     = integer | identifier | "(" , expr , ")" ;
//! ```
//!
//! Products are kept in the order written; noncommutative contexts
//! reorder only through their own relations.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use qgalois::ncalg::{NCAlgebraSpec, NCElement};
use qgalois::quantumgroup::{HopfQElement, Monomial};
use qgalois::ratfunc::RatFunc;
use qgalois::ScalarQ;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("cannot evaluate at {pos}: {msg}")]
    Eval { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|(_, c)| c).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Int(BigInt),
    Sym(String, usize),
    Neg(Box<Expr>),
    Bin(char, usize, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let op = match self.peek() {
                Some(Tok::Op(c @ ('+' | '-'))) => *c,
                _ => return Ok(lhs),
            };
            self.at += 1;
            lhs = Expr::Bin(op, pos, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let op = match self.peek() {
                Some(Tok::Op(c @ ('*' | '/'))) => *c,
                _ => return Ok(lhs),
            };
            self.at += 1;
            lhs = Expr::Bin(op, pos, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: i64 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                self.at += 1;
                if neg {
                    -n
                } else {
                    n
                }
            }
            _ => return self.err("expected an integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        Ok(Expr::Pow(Box::new(base), e, pos))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Sym(s, pos))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_ast(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Arithmetic a context must supply.
trait Target: Sized {
    fn int(&self, n: &BigInt) -> Self::V;
    fn symbol(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V, String>;
    fn pow(&self, a: &Self::V, e: i64) -> Result<Self::V, String>;
    type V;
}

fn eval<T: Target>(ctx: &T, e: &Expr) -> Result<T::V, ParseError> {
    Ok(match e {
        Expr::Int(n) => ctx.int(n),
        Expr::Sym(s, pos) => ctx.symbol(s).ok_or_else(|| ParseError::UnknownSymbol {
            pos: *pos,
            name: s.clone(),
        })?,
        Expr::Neg(a) => ctx.neg(&eval(ctx, a)?),
        Expr::Bin(op, pos, a, b) => {
            let (a, b) = (eval(ctx, a)?, eval(ctx, b)?);
            match op {
                '+' => ctx.add(&a, &b),
                '-' => ctx.sub(&a, &b),
                '*' => ctx.mul(&a, &b),
                _ => ctx.div(&a, &b).map_err(|msg| ParseError::Eval { pos: *pos, msg })?,
            }
        }
        Expr::Pow(a, k, pos) => ctx
            .pow(&eval(ctx, a)?, *k)
            .map_err(|msg| ParseError::Eval { pos: *pos, msg })?,
    })
}

struct ScalarCtx;

impl Target for ScalarCtx {
    type V = ScalarQ;
    fn int(&self, n: &BigInt) -> ScalarQ {
        ScalarQ::from_bigint(n.clone())
    }
    fn symbol(&self, name: &str) -> Option<ScalarQ> {
        (name == "q").then(ScalarQ::q)
    }
    fn add(&self, a: &ScalarQ, b: &ScalarQ) -> ScalarQ {
        a + b
    }
    fn sub(&self, a: &ScalarQ, b: &ScalarQ) -> ScalarQ {
        a - b
    }
    fn mul(&self, a: &ScalarQ, b: &ScalarQ) -> ScalarQ {
        a * b
    }
    fn neg(&self, a: &ScalarQ) -> ScalarQ {
        -a
    }
    fn div(&self, a: &ScalarQ, b: &ScalarQ) -> Result<ScalarQ, String> {
        a.checked_div(b).map_err(|e| e.to_string())
    }
    fn pow(&self, a: &ScalarQ, e: i64) -> Result<ScalarQ, String> {
        a.powi(e).map_err(|e| e.to_string())
    }
}

struct FieldCtx;

impl Target for FieldCtx {
    type V = RatFunc;
    fn int(&self, n: &BigInt) -> RatFunc {
        RatFunc::constant(ScalarQ::from_bigint(n.clone()))
    }
    fn symbol(&self, name: &str) -> Option<RatFunc> {
        match name {
            "q" => Some(RatFunc::constant(ScalarQ::q())),
            "t" => Some(RatFunc::t()),
            _ => None,
        }
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a + b
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a - b
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn div(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, String> {
        a.checked_div(b).ok_or_else(|| "division by zero".into())
    }
    fn pow(&self, a: &RatFunc, e: i64) -> Result<RatFunc, String> {
        a.powi(e).ok_or_else(|| "zero to a negative power".into())
    }
}

struct HqCtx;

fn hq_scalar(a: &HopfQElement) -> Option<ScalarQ> {
    let one = Monomial::new(0, 0);
    match a.terms().collect::<Vec<_>>().as_slice() {
        [] => Some(ScalarQ::zero()),
        [(m, c)] if **m == one => Some((*c).clone()),
        _ => None,
    }
}

impl Target for HqCtx {
    type V = HopfQElement;
    fn int(&self, n: &BigInt) -> HopfQElement {
        HopfQElement::scalar(ScalarQ::from_bigint(n.clone()))
    }
    fn symbol(&self, name: &str) -> Option<HopfQElement> {
        match name {
            "q" => Some(HopfQElement::scalar(ScalarQ::q())),
            "u" => Some(HopfQElement::u()),
            "uinv" => Some(HopfQElement::uinv()),
            "v" => Some(HopfQElement::v()),
            _ => None,
        }
    }
    fn add(&self, a: &HopfQElement, b: &HopfQElement) -> HopfQElement {
        a.add(b)
    }
    fn sub(&self, a: &HopfQElement, b: &HopfQElement) -> HopfQElement {
        a.sub(b)
    }
    fn mul(&self, a: &HopfQElement, b: &HopfQElement) -> HopfQElement {
        a.mul(b)
    }
    fn neg(&self, a: &HopfQElement) -> HopfQElement {
        a.neg()
    }
    fn div(&self, a: &HopfQElement, b: &HopfQElement) -> Result<HopfQElement, String> {
        let c = hq_scalar(b).ok_or("only division by scalars is supported")?;
        let inv = c.inv().ok_or("division by zero")?;
        Ok(a.scale(&inv))
    }
    fn pow(&self, a: &HopfQElement, e: i64) -> Result<HopfQElement, String> {
        if e >= 0 {
            return Ok(a.pow(e as u32));
        }
        let terms: Vec<_> = a.terms().collect();
        match terms.as_slice() {
            [(m, c)] if m.b == 0 => {
                let inv = c.inv().ok_or("zero to a negative power")?;
                Ok(HopfQElement::term(inv, Monomial::new(-m.a, 0)).pow(e.unsigned_abs() as u32))
            }
            _ => Err(format!("{a} is not a unit of the form c u^a")),
        }
    }
}

struct AlgebraCtx<'a>(&'a Arc<NCAlgebraSpec>);

fn nc_scalar(a: &NCElement) -> Option<ScalarQ> {
    let c = a.scalar_part();
    (*a == NCElement::scalar(a.spec(), c.clone())).then_some(c)
}

impl Target for AlgebraCtx<'_> {
    type V = NCElement;
    fn int(&self, n: &BigInt) -> NCElement {
        NCElement::scalar(self.0, ScalarQ::from_bigint(n.clone()))
    }
    fn symbol(&self, name: &str) -> Option<NCElement> {
        if name == "q" && self.0.index_of("q").is_none() {
            return Some(NCElement::scalar(self.0, ScalarQ::q()));
        }
        self.0.gen(name).ok()
    }
    fn add(&self, a: &NCElement, b: &NCElement) -> NCElement {
        a + b
    }
    fn sub(&self, a: &NCElement, b: &NCElement) -> NCElement {
        a - b
    }
    fn mul(&self, a: &NCElement, b: &NCElement) -> NCElement {
        a * b
    }
    fn neg(&self, a: &NCElement) -> NCElement {
        -a
    }
    fn div(&self, a: &NCElement, b: &NCElement) -> Result<NCElement, String> {
        let c = nc_scalar(b).ok_or("only division by scalars is supported")?;
        let inv = c.inv().ok_or("division by zero")?;
        Ok(a.scale(&inv))
    }
    fn pow(&self, a: &NCElement, e: i64) -> Result<NCElement, String> {
        let base = if e < 0 { a.invert().map_err(|e| e.to_string())? } else { a.clone() };
        Ok(base.pow(e.unsigned_abs() as u32))
    }
}

/// Where an expression is read.
#[derive(Debug, Clone)]
pub enum Context {
    /// `Q(q)`.
    Scalar,
    /// `Q(q)(t)`.
    Field,
    /// The Hopf algebra with `u`, `uinv`, `v`.
    Hq,
    /// A presented algebra; its generators are the symbols.
    Algebra(Arc<NCAlgebraSpec>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(ScalarQ),
    Field(RatFunc),
    Hq(HopfQElement),
    Algebra(NCElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => x.fmt(f),
            Value::Field(x) => x.fmt(f),
            Value::Hq(x) => x.fmt(f),
            Value::Algebra(x) => x.fmt(f),
        }
    }
}

pub fn parse_expression(text: &str, ctx: &Context) -> Result<Value, ParseError> {
    let ast = parse_ast(text)?;
    Ok(match ctx {
        Context::Scalar => Value::Scalar(eval(&ScalarCtx, &ast)?),
        Context::Field => Value::Field(eval(&FieldCtx, &ast)?),
        Context::Hq => Value::Hq(eval(&HqCtx, &ast)?),
        Context::Algebra(spec) => Value::Algebra(eval(&AlgebraCtx(spec), &ast)?),
    })
}

pub fn parse_scalar(text: &str) -> Result<ScalarQ, ParseError> {
    eval(&ScalarCtx, &parse_ast(text)?)
}

pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ParseError> {
    eval(&FieldCtx, &parse_ast(text)?)
}

pub fn parse_hq(text: &str) -> Result<HopfQElement, ParseError> {
    eval(&HqCtx, &parse_ast(text)?)
}

pub fn parse_element(text: &str, spec: &Arc<NCAlgebraSpec>) -> Result<NCElement, ParseError> {
    eval(&AlgebraCtx(spec), &parse_ast(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgalois::ncalg::catalog;
    use qgalois::qcomb::qint;

    #[test]
    fn scalar_cancellation() {
        assert_eq!(parse_scalar("(q^2-1)/(q-1)").unwrap(), qint(2));
        assert_eq!(parse_scalar("q^-1").unwrap(), ScalarQ::q_pow(-1));
        assert_eq!(parse_scalar("-q^2").unwrap(), -ScalarQ::q_pow(2));
    }

    #[test]
    fn field_generator() {
        assert_eq!(parse_ratfunc("t").unwrap(), RatFunc::t());
        assert_eq!(parse_ratfunc("1/(t - 1)").unwrap(), (&RatFunc::t() - &RatFunc::one()).inv().unwrap());
    }

    #[test]
    fn hq_reorders_once() {
        let v = parse_hq("v*u").unwrap();
        assert_eq!(v, HopfQElement::monomial(1, 1).scale(&ScalarQ::q()));
        assert_eq!(parse_hq("u^-2").unwrap(), HopfQElement::monomial(-2, 0));
    }

    #[test]
    fn algebra_context() {
        let spec = catalog::a1();
        let x = parse_element("phi*eps", &spec).unwrap();
        assert_eq!(x, (&spec.g("eps") * &spec.g("phi")).scale(&ScalarQ::q()));
        assert_eq!(parse_element("(1 + eps)^-1", &spec).unwrap(), &spec.one() - &spec.g("eps"));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_scalar("q + s"),
            Err(ParseError::UnknownSymbol { pos: 4, name: "s".into() })
        );
        assert!(matches!(parse_scalar("(q + 1"), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_scalar("q $"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_scalar("1/(q - q)"), Err(ParseError::Eval { pos: 1, .. })));
        assert!(matches!(parse_hq("u/v"), Err(ParseError::Eval { .. })));
    }
}
