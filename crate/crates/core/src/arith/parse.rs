//! Text input for polynomials.
//!
//! Accepts either an ASCII expression in `t` (integer literals, `+ - * ^`,
//! parentheses, juxtaposition such as `3t^2`) or a JSON-style coefficient
//! array, lowest degree first: `[1, 3, -2]` or `["1", "3", "-2"]`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::IntPoly;
use crate::error::{Error, Result};

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        return parse_coeff_array(trimmed);
    }
    let mut p = Parser { src: trimmed.as_bytes(), pos: 0 };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(poly)
}

fn parse_coeff_array(text: &str) -> Result<IntPoly> {
    let inner = text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, "unterminated coefficient array"))?;
    if inner.trim().is_empty() {
        return Ok(IntPoly::zero());
    }
    let mut coeffs = Vec::new();
    let mut offset = 1;
    for item in inner.split(',') {
        let tok = item.trim().trim_matches('"');
        let c = BigInt::from_str(tok)
            .map_err(|_| Error::parse(offset, format!("bad coefficient '{}'", item.trim())))?;
        coeffs.push(c);
        offset += item.len() + 1;
    }
    Ok(IntPoly::new(coeffs))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                // juxtaposition: 3t, 2(t+1), t(t-1)
                Some(c) if c.is_ascii_digit() || c == b't' || c == b'(' => {
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse(start, "exponent must be a non-negative integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(IntPoly::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(IntPoly::constant(BigInt::from_str(&d).expect("digits")))
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_poly("t^4 - 1").unwrap(), IntPoly::binomial(4, -1));
        assert_eq!(parse_poly("1+3t-2t^2").unwrap(), p(&[1, 3, -2]));
        assert_eq!(parse_poly("(t^3+1)*(1+t)").unwrap(), p(&[1, 1, 0, 1, 1]));
        assert_eq!(parse_poly("-t").unwrap(), p(&[0, -1]));
        assert_eq!(parse_poly("2(t+1)^2").unwrap(), p(&[2, 4, 2]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
        assert_eq!(parse_poly(" - 2 * t ^ 3 + t").unwrap(), p(&[0, 1, 0, -2]));
    }

    #[test]
    fn arrays() {
        assert_eq!(parse_poly("[1,3,-2]").unwrap(), p(&[1, 3, -2]));
        assert_eq!(parse_poly("[\"1\", \"3\", \"-2\"]").unwrap(), p(&[1, 3, -2]));
        assert_eq!(parse_poly("[]").unwrap(), IntPoly::zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("t^"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(t+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("[1,a]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("t t )"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn display_round_trips() {
        for c in [&[1i64, 3, -2][..], &[-1, 0, 0, 0, 1], &[0, -1], &[7]] {
            let f = p(c);
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }
}
