use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::{Poly, Rational};

/// Parses a polynomial written with `+ - * ^`, parentheses, integer or `n/d`
/// literals and the given variable names, e.g. `"C2^2 - 2*C2*M1 + 1/2"`.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<Poly> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, vars };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("unexpected trailing input in {text:?}")));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '~') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let f = self.unary()?;
            if op == '*' {
                acc = &acc * &f;
            } else {
                if !f.is_constant() || f.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                let c = f.constant_term();
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let arity = self.vars.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(arity, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(Poly::var(arity, idx))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    fn names() -> Vec<String> {
        vec!["C2".into(), "M1".into()]
    }

    #[test]
    fn parses_printed_factor() {
        let p = parse_poly("M1^2 + 52*M1 - 36*C2 + 640", &names()).unwrap();
        assert_eq!(p.coeff(&[0, 2]), q(1));
        assert_eq!(p.coeff(&[0, 1]), q(52));
        assert_eq!(p.coeff(&[1, 0]), q(-36));
        assert_eq!(p.constant_term(), q(640));
    }

    #[test]
    fn display_round_trip() {
        let p = parse_poly("(C2 - 1/2*M1)^3 - 7", &names()).unwrap();
        let shown = p.display_with(&names()).to_string();
        assert_eq!(parse_poly(&shown, &names()).unwrap(), p);
        assert_eq!(p.coeff(&[0, 3]), qf(-1, 8));
    }

    #[test]
    fn errors() {
        assert!(parse_poly("C3 + 1", &names()).is_err());
        assert!(parse_poly("C2 +", &names()).is_err());
        assert!(parse_poly("C2 / M1", &names()).is_err());
        assert!(parse_poly("(C2", &names()).is_err());
    }
}
