//! Recursive-descent parser for field elements.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 't' | '(' expr ')'
//! ```
//!
//! Juxtaposition covers the canonical output form `3t^2` and `(1/2)t`.

use num_bigint::BigInt;

use super::{FieldElem, FieldSpec};
use crate::error::{Error, Result};

pub(super) fn parse_elem(field: FieldSpec, s: &str) -> Result<FieldElem> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut p = Parser {
        field,
        chars,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected {:?} at offset {} in {s:?}",
            p.chars[p.pos], p.pos
        )));
    }
    Ok(v)
}

struct Parser {
    field: FieldSpec,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                Some('t' | '(') => acc = acc * self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElem> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits();
        let e: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {digits:?}")))?;
        let v = base.pow(e);
        if negative {
            v.inv()
        } else {
            Ok(v)
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<FieldElem> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                self.field
                    .variable()
                    .ok_or_else(|| Error::Parse(format!("field {} has no variable t", self.field)))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(self.field.from_bigint(&n))
            }
            Some(c) => Err(Error::Parse(format!("unexpected {c:?} at offset {}", self.pos))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let q = FieldSpec::Rationals;
        assert_eq!(parse_elem(q, "1+2*3").unwrap(), q.from_i64(7));
        assert_eq!(parse_elem(q, "-2^2").unwrap(), q.from_i64(-4));
        assert_eq!(parse_elem(q, "2^-1").unwrap(), parse_elem(q, "1/2").unwrap());
    }

    #[test]
    fn juxtaposition() {
        let qt = FieldSpec::RationalFunction;
        let a = parse_elem(qt, "3t^2").unwrap();
        let b = parse_elem(qt, "3*t*t").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        assert!(parse_elem(FieldSpec::Rationals, "t").is_err());
        assert!(parse_elem(FieldSpec::Rationals, "1/0").is_err());
        assert!(parse_elem(FieldSpec::Rationals, "(1").is_err());
        assert!(parse_elem(FieldSpec::Rationals, "").is_err());
    }
}
