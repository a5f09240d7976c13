use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Poly, Rational};

/// One serialized term; numerator and denominator are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// `{"vars": [...], "terms": [...]}`, terms sorted graded-lexicographically (highest first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &Poly, vars: &[String]) -> Self {
        let terms = p
            .terms_grlex_desc()
            .into_iter()
            .map(|(e, c)| TermJson { exp: e.clone(), num: c.numer().to_string(), den: c.denom().to_string() })
            .collect();
        PolyJson { vars: vars.to_vec(), terms }
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let arity = self.vars.len();
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rational(&t.num, &t.den)?)))
            .collect::<Result<Vec<_>>>()?;
        Poly::from_terms(arity, terms)
    }
}

pub fn parse_rational(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num.trim().parse().map_err(|_| Error::Parse(format!("bad numerator {num:?}")))?;
    let d: BigInt = den.trim().parse().map_err(|_| Error::Parse(format!("bad denominator {den:?}")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Rational as `"n"` or `"n/d"`.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"n"`, `"-n"`, or `"n/d"`.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => parse_rational(n, d),
        None => parse_rational(s, "1"),
    }
}
