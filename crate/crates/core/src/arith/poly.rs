//! Dense univariate polynomials over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial in `t` with integer coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `t^n + c`.
    pub fn binomial(n: usize, c: i64) -> Self {
        let mut p = Self::monomial(BigInt::one(), n);
        p = &p + &Self::constant(BigInt::from(c));
        p
    }

    /// `1 + t + ... + t^(len-1)`; zero when `len == 0`.
    pub fn geometric(len: usize) -> Self {
        Self::new(vec![BigInt::one(); len])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Leading coefficient is +1 or -1.
    pub fn is_unit_leading(&self) -> bool {
        self.leading().is_some_and(|c| c.abs().is_one())
    }

    pub(crate) fn require_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NotMonic(self.to_string()))
        }
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc.gcd(c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_exact_scalar(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`; panics if some division is inexact.
    pub(crate) fn div_exact_scalar(&self, c: &BigInt) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Quotient and remainder of division by `g`, which must have leading
    /// coefficient +1 or -1.
    pub fn div_rem(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = match g.leading() {
            None => return Err(Error::NonUnitLeadingCoefficient(BigInt::zero())),
            Some(l) if !l.abs().is_one() => return Err(Error::NonUnitLeadingCoefficient(l.clone())),
            Some(l) => l.clone(),
        };
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dg] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[k + j] -= &c * gj;
            }
            quot[k] = c;
        }
        rem.truncate(dg);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    pub fn rem(&self, g: &IntPoly) -> Result<IntPoly> {
        Ok(self.div_rem(g)?.1)
    }

    /// Exact quotient `self / g` for a unit-leading `g`; `None` when `g` does not divide.
    pub fn div_exact(&self, g: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem(g).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The composition `self(h(t))`.
    pub fn compose(&self, h: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * h) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Horner shift of degree `k`: drop the `m - k` lowest terms of a degree-`m`
    /// polynomial and divide by `t^(m-k)`.
    pub fn horner_shift(&self, k: usize) -> Result<IntPoly> {
        let m = match self.degree() {
            Degree::Finite(m) if k < m => m,
            Degree::Finite(m) => return Err(Error::IndexOutOfRange { index: k, limit: m }),
            Degree::NegInfinity => return Err(Error::IndexOutOfRange { index: k, limit: 0 }),
        };
        Ok(IntPoly::new(self.coeffs[m - k..].to_vec()))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    /// Ascending order, e.g. `1 + 3t - 2t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i.cmp(&1) {
                Ordering::Less => {}
                Ordering::Equal => write!(f, "t")?,
                Ordering::Greater => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p(&[0, 0, 0, 0, 1]).div_rem(&p(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 0, 1]), p(&[1])));

        let f = p(&[1, 3, -2]);
        let (q, r) = f.div_rem(&IntPoly::binomial(4, -1)).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, f);

        let (q, r) = p(&[1, -2, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_rejects_non_unit_lead() {
        assert!(matches!(
            p(&[1, 1, 1]).div_rem(&p(&[1, 2])),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
        assert!(p(&[1]).div_rem(&IntPoly::zero()).is_err());
        // leading -1 is fine
        let (q, r) = p(&[0, 0, 1]).div_rem(&p(&[0, -1])).unwrap();
        assert_eq!(q, p(&[0, -1]));
        assert!(r.is_zero());
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[3, 9, 6]).content(), BigInt::from(3));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
        assert_eq!(p(&[1, 3, -2]).content(), BigInt::one());
        assert_eq!(p(&[-4, -6]).content(), BigInt::from(2));
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        assert_eq!(IntPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(p(&[0, 0, 5]).degree(), Degree::Finite(2));
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn horner_shift_examples() {
        let h = p(&[1, -2, 0, 1]);
        assert_eq!(h.horner_shift(2).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(h.horner_shift(1).unwrap(), p(&[0, 1]));
        assert_eq!(h.horner_shift(0).unwrap(), p(&[1]));
        assert!(matches!(h.horner_shift(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[-1, 0, 1]).compose(&p(&[0, 0, 1])), IntPoly::binomial(4, -1));
        assert_eq!(p(&[-1, 1]).compose(&IntPoly::monomial(BigInt::one(), 5)), IntPoly::binomial(5, -1));
        assert_eq!(p(&[1, 1, 1]).compose(&p(&[1, 1])), p(&[3, 3, 1]));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(p(&[1, 3, -2]).to_string(), "1 + 3t - 2t^2");
        assert_eq!(p(&[-1, 0, 0, 0, 1]).to_string(), "-1 + t^4");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
