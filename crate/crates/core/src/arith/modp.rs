//! Polynomials over a prime field `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::factor::is_prime;
use super::poly::{Degree, IntPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    p: BigInt,
    coeffs: Vec<BigInt>,
}

impl ModPoly {
    /// Builds a polynomial over `F_p` from arbitrary integer coefficients.
    pub fn new(p: BigInt, coeffs: Vec<BigInt>) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::new_unchecked(p, coeffs))
    }

    pub(crate) fn new_unchecked(p: BigInt, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(|c| c.mod_floor(&p)).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
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

    fn inv(&self, a: &BigInt) -> BigInt {
        let e = a.extended_gcd(&self.p);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(&self.p)
    }

    fn make_monic(mut self) -> Self {
        if let Some(lead) = self.coeffs.last().cloned() {
            let inv = self.inv(&lead);
            for c in &mut self.coeffs {
                *c = (&*c * &inv).mod_floor(&self.p);
            }
        }
        self
    }

    fn rem(&self, b: &ModPoly) -> ModPoly {
        let db = b.coeffs.len() - 1;
        let lead_inv = self.inv(&b.coeffs[db]);
        let mut a = self.coeffs.clone();
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = (&a[a.len() - 1] * &lead_inv).mod_floor(&self.p);
            if !c.is_zero() {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    a[k + j] = (&a[k + j] - &c * bj).mod_floor(&self.p);
                }
            }
            a.pop();
            while a.last().is_some_and(Zero::is_zero) {
                a.pop();
            }
        }
        ModPoly { p: self.p.clone(), coeffs: a }
    }

    pub fn mul(&self, other: &ModPoly) -> Result<ModPoly> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.clone(), other.p.clone()));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(ModPoly { p: self.p.clone(), coeffs: Vec::new() });
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new_unchecked(self.p.clone(), out))
    }
}

/// Coefficientwise reduction of `f` into `F_p[t]`.
pub fn reduce_mod_p(f: &IntPoly, p: &BigInt) -> Result<ModPoly> {
    ModPoly::new(p.clone(), f.coeffs().to_vec())
}

/// Monic gcd in `F_p[t]` by Euclid.
pub fn gcd_mod_p(a: &ModPoly, b: &ModPoly) -> Result<ModPoly> {
    if a.p != b.p {
        return Err(Error::ModulusMismatch(a.p.clone(), b.p.clone()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    Ok(x.make_monic())
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lifted = IntPoly::new(self.coeffs.clone());
        write!(f, "{lifted} (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn mp(c: &[i64], m: i64) -> ModPoly {
        reduce_mod_p(&p(c), &BigInt::from(m)).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(mp(&[1, 3, -2], 2).coeffs(), p(&[1, 1]).coeffs());
        assert_eq!(mp(&[1, 3, -2], 3).coeffs(), p(&[1, 0, 1]).coeffs());
        assert!(mp(&[0, 3], 3).is_zero());
        assert!(matches!(reduce_mod_p(&p(&[1]), &BigInt::from(4)), Err(Error::NotPrime(_))));
    }

    #[test]
    fn gcd_examples() {
        let g = gcd_mod_p(&mp(&[1, 1], 2), &mp(&[1, 0, 0, 0, 1], 2)).unwrap();
        assert_eq!(g.coeffs(), p(&[1, 1]).coeffs());
        let g = gcd_mod_p(&mp(&[1, 0, 1], 3), &mp(&[-1, 0, 0, 0, 1], 3)).unwrap();
        assert_eq!(g.coeffs(), p(&[1, 0, 1]).coeffs());
        let g = gcd_mod_p(&mp(&[1], 5), &mp(&[3, 1, 4, 1], 5)).unwrap();
        assert_eq!(g.coeffs(), p(&[1]).coeffs());
    }

    #[test]
    fn gcd_errors() {
        assert_eq!(gcd_mod_p(&mp(&[0], 3), &mp(&[3], 3)), Err(Error::BothZero));
        assert!(matches!(gcd_mod_p(&mp(&[1], 3), &mp(&[1], 5)), Err(Error::ModulusMismatch(..))));
    }

    #[test]
    fn gcd_is_monic() {
        // 2(t + 1) and (t + 1)(t + 2) over F_5
        let a = mp(&[2, 2], 5);
        let b = mp(&[2, 3, 1], 5);
        assert_eq!(gcd_mod_p(&a, &b).unwrap().coeffs(), p(&[1, 1]).coeffs());
    }
}
