use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::IntPoly;
use crate::error::{Error, Result};

/// Defining word of a cyclic presentation on generators `x_0, …, x_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicWord {
    n: usize,
    syllables: Vec<(usize, BigInt)>,
}

impl CyclicWord {
    /// Builds a word, merging adjacent syllables on the same generator.
    pub fn new(n: usize, syllables: Vec<(usize, BigInt)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a cyclic presentation needs n >= 1".into()));
        }
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(syllables.len());
        for (g, e) in syllables {
            if g >= n {
                return Err(Error::IndexOutOfRange { index: g, limit: n });
            }
            match out.last_mut() {
                Some((last, acc)) if *last == g => {
                    *acc += e;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ if e.is_zero() => {}
                _ => out.push((g, e)),
            }
        }
        Ok(CyclicWord { n, syllables: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syllables(&self) -> &[(usize, BigInt)] {
        &self.syllables
    }

    /// Applies the shift automorphism `x_i -> x_{i+k}` (indices mod n).
    pub fn shifted(&self, k: usize) -> CyclicWord {
        let syl = self.syllables.iter().map(|(g, e)| ((g + k) % self.n, e.clone())).collect();
        CyclicWord::new(self.n, syl).expect("indices stay in range")
    }

    /// Cyclic permutation of the word by `k` syllables.
    pub fn rotated(&self, k: usize) -> CyclicWord {
        let mut syl = self.syllables.clone();
        if !syl.is_empty() {
            let k = k % syl.len();
            syl.rotate_left(k);
        }
        CyclicWord::new(self.n, syl).expect("indices stay in range")
    }

    /// `Σ a_i t^i` where `a_i` is the exponent sum of `x_i`.
    pub fn exponent_polynomial(&self) -> IntPoly {
        let mut c = vec![BigInt::zero(); self.n];
        for (g, e) in &self.syllables {
            c[*g] += e;
        }
        IntPoly::new(c)
    }
}

pub fn exponent_polynomial(w: &CyclicWord) -> IntPoly {
    w.exponent_polynomial()
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|(g, e)| if e.is_one() { format!("x{g}") } else { format!("x{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses `(x<digits>(^<signed integer>)?)+` with optional whitespace.
pub fn parse_word(text: &str, n: usize) -> Result<CyclicWord> {
    let src = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < src.len() && src[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let digits = |pos: &mut usize| {
        let start = *pos;
        while *pos < src.len() && src[*pos].is_ascii_digit() {
            *pos += 1;
        }
        &text[start..*pos]
    };
    let mut syllables = Vec::new();
    skip_ws(&mut pos);
    if pos == src.len() {
        return Err(Error::parse(pos, "empty word"));
    }
    while pos < src.len() {
        if src[pos] != b'x' {
            return Err(Error::parse(pos, format!("expected 'x', found '{}'", src[pos] as char)));
        }
        pos += 1;
        let at = pos;
        let idx = digits(&mut pos);
        let g: usize = idx.parse().map_err(|_| Error::parse(at, "expected generator index"))?;
        if g >= n {
            return Err(Error::IndexOutOfRange { index: g, limit: n });
        }
        skip_ws(&mut pos);
        let mut e = BigInt::one();
        if pos < src.len() && src[pos] == b'^' {
            pos += 1;
            skip_ws(&mut pos);
            let at = pos;
            let neg = pos < src.len() && (src[pos] == b'-' || src[pos] == b'+');
            let sign = if neg && src[pos] == b'-' { -1 } else { 1 };
            if neg {
                pos += 1;
            }
            let d = digits(&mut pos);
            e = BigInt::from_str(d).map_err(|_| Error::parse(at, "expected integer exponent"))? * sign;
            if e.is_zero() {
                return Err(Error::parse(at, "zero exponent"));
            }
        }
        syllables.push((g, e));
        skip_ws(&mut pos);
    }
    CyclicWord::new(n, syllables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syl(v: &[(usize, i64)]) -> Vec<(usize, BigInt)> {
        v.iter().map(|&(g, e)| (g, BigInt::from(e))).collect()
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("x0 x1^3 x2^-2", 4).unwrap();
        assert_eq!(w.syllables(), syl(&[(0, 1), (1, 3), (2, -2)]).as_slice());
        assert_eq!(w.exponent_polynomial(), IntPoly::from_i64s(&[1, 3, -2]));
        let w = parse_word("x0 x1 x0", 2).unwrap();
        assert_eq!(w.syllables(), syl(&[(0, 1), (1, 1), (0, 1)]).as_slice());
        assert_eq!(w.exponent_polynomial(), IntPoly::from_i64s(&[2, 1]));
        assert!(matches!(parse_word("x0^0", 2), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_word("x5", 4), Err(Error::IndexOutOfRange { index: 5, limit: 4 })));
        assert!(matches!(parse_word("y0", 4), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_word("x0 x", 4), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_word("x1^", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("   ", 4), Err(Error::Parse { .. })));
    }

    #[test]
    fn normalization_merges_neighbours() {
        let w = parse_word("x0 x1^2x1^-2 x0^-1", 3).unwrap();
        assert!(w.syllables().is_empty());
        assert_eq!(w.exponent_polynomial(), IntPoly::zero());
        let w = parse_word("x1x1 x2^+3", 3).unwrap();
        assert_eq!(w.syllables(), syl(&[(1, 2), (2, 3)]).as_slice());
        assert_eq!(w.to_string(), "x1^2 x2^3");
    }

    #[test]
    fn shift_multiplies_by_t() {
        let w = parse_word("x0 x1^3 x2^-2", 4).unwrap();
        let g = IntPoly::binomial(4, -1);
        let shifted = w.shifted(3).exponent_polynomial();
        assert_eq!(shifted, w.exponent_polynomial().shift(3).rem(&g).unwrap());
        assert_eq!(w.rotated(1).exponent_polynomial(), w.exponent_polynomial());
    }
}
