//! Algebra presentations: catalog names or the text printed by
//! `NCAlgebraSpec::presentation`.
//!
//! ```text
//! presentation = section , { section } ;
//! section      = ( "gens" | "comm" | "nilp" | "inv" | "central" ) , ":" , items , ";" ;
//! comm item    = ident , "*" , ident , "->" , scalar , "*" , ident , "*" , ident ;
//! nilp item    = ident , "^" , integer ;
//! inv item     = ident , "*" , ident ;
//! ```
//!
//! Catalog names: `A1`, `A2`, `A3`, `dual2`, `free<k>`, `B<k>`.

use std::sync::Arc;

use qgalois::ncalg::{catalog, NCAlgebraSpec};
use qgalois::ScalarQ;
use thiserror::Error;

use crate::parse::{parse_scalar, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("bad presentation: {0}")]
    Syntax(String),
    #[error("bad scalar in `{item}`: {source}")]
    Scalar { item: String, source: ParseError },
    #[error("invalid algebra: {0}")]
    Invalid(String),
}

fn syntax<T>(msg: impl Into<String>) -> Result<T, PresentationError> {
    Err(PresentationError::Syntax(msg.into()))
}

fn ident(s: &str) -> Result<&str, PresentationError> {
    let s = s.trim();
    let mut chars = s.chars();
    let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(s)
    } else {
        syntax(format!("`{s}` is not a generator name"))
    }
}

fn pair<'a>(s: &'a str, sep: char, item: &str) -> Result<(&'a str, &'a str), PresentationError> {
    match s.split_once(sep) {
        Some((a, b)) => Ok((a.trim(), b.trim())),
        None => syntax(format!("expected `{sep}` in `{item}`")),
    }
}

fn catalog_entry(name: &str) -> Option<Arc<NCAlgebraSpec>> {
    let count = |prefix: &str| name.strip_prefix(prefix).and_then(|k| k.parse::<u32>().ok()).filter(|&k| k > 0);
    match name {
        "A1" => Some(catalog::a1()),
        "A2" => Some(catalog::a2()),
        "A3" => Some(catalog::a3()),
        "dual2" => Some(catalog::commutative_pair()),
        _ => {
            if let Some(k) = count("free").filter(|&k| k >= 2) {
                Some(catalog::free_nilpotent(k))
            } else {
                count("B").map(|k| catalog::quantum_points(k as usize, 2, &ScalarQ::q()))
            }
        }
    }
}

/// A catalog name or a written presentation.
pub fn parse_presentation(text: &str) -> Result<Arc<NCAlgebraSpec>, PresentationError> {
    let text = text.trim();
    if let Some(spec) = catalog_entry(text) {
        return Ok(spec);
    }
    let mut b = NCAlgebraSpec::builder("custom");
    let mut seen_gens = false;
    for section in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, body) = pair(section, ':', section)?;
        let items = body.split(',').map(str::trim).filter(|s| !s.is_empty());
        match key {
            "gens" => {
                seen_gens = true;
                for g in items {
                    b = b.generator(ident(g)?);
                }
            }
            "comm" => {
                for item in items {
                    let (lhs, rhs) = match item.split_once("->") {
                        Some((l, r)) => (l.trim(), r.trim()),
                        None => return syntax(format!("expected `->` in `{item}`")),
                    };
                    let (y, x) = pair(lhs, '*', item)?;
                    let mut parts = rhs.rsplitn(3, '*');
                    let (Some(y2), Some(x2), Some(c)) = (parts.next(), parts.next(), parts.next()) else {
                        return syntax(format!("expected `c * x*y` in `{item}`"));
                    };
                    if ident(x2)? != ident(x)? || ident(y2)? != ident(y)? {
                        return syntax(format!("`{item}` must read `y*x -> c * x*y`"));
                    }
                    let c = parse_scalar(c.trim()).map_err(|source| PresentationError::Scalar {
                        item: item.to_string(),
                        source,
                    })?;
                    b = b.commute(y, x, c);
                }
            }
            "nilp" => {
                for item in items {
                    let (x, k) = pair(item, '^', item)?;
                    let k = k
                        .parse::<u32>()
                        .or_else(|_| syntax(format!("bad exponent in `{item}`")))?;
                    b = b.nilpotent(ident(x)?, k);
                }
            }
            "inv" => {
                for item in items {
                    let (a, ainv) = pair(item, '*', item)?;
                    b = b.inverse_pair(ident(a)?, ident(ainv)?);
                }
            }
            "central" => {
                for c in items {
                    b = b.central(ident(c)?);
                }
            }
            other => return syntax(format!("unknown section `{other}`")),
        }
    }
    if !seen_gens {
        return syntax("missing `gens:` section");
    }
    b.build().map_err(|e| PresentationError::Invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_resolve() {
        for name in ["A1", "A2", "A3", "dual2", "free3", "B2"] {
            assert!(parse_presentation(name).is_ok(), "{name}");
        }
        assert!(parse_presentation("B0").is_err());
    }

    #[test]
    fn printed_presentations_round_trip() {
        for name in ["A1", "A2", "A3", "dual2", "free3", "B1", "B2"] {
            let spec = parse_presentation(name).unwrap();
            let again = parse_presentation(&spec.presentation()).unwrap();
            assert_eq!(again.presentation(), spec.presentation(), "{name}");
        }
    }

    #[test]
    fn written_presentation() {
        let spec = parse_presentation("gens: x, y; comm: y*x -> q^2 * x*y; nilp: x^2").unwrap();
        let (x, y) = (spec.g("x"), spec.g("y"));
        assert_eq!(&y * &x, (&x * &y).scale(&ScalarQ::q_pow(2)));
        assert!((&x * &x).is_zero());
        let central = parse_presentation("gens: a; central: z").unwrap();
        assert_eq!(&central.g("z") * &central.g("a"), &central.g("a") * &central.g("z"));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_presentation("comm: y*x -> q * x*y"), Err(PresentationError::Syntax(_))));
        assert!(matches!(
            parse_presentation("gens: x, y; comm: y*x -> s * x*y"),
            Err(PresentationError::Scalar { .. })
        ));
        assert!(matches!(parse_presentation("gens: x, x"), Err(PresentationError::Invalid(_))));
        assert!(matches!(parse_presentation("gens: x; nilp: x^k"), Err(PresentationError::Syntax(_))));
    }
}
