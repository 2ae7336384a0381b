use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

fn to_rational(f: &IntPoly) -> Vec<BigRational> {
    f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `a` by `b` over the rationals; `b` nonzero.
fn rem_q(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    while a.len() > db {
        let k = a.len() - 1 - db;
        let c = &a[a.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            a[k + j] -= &c * bj;
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Clears denominators and content, sign-normalised to a positive leading coefficient.
fn primitive_from_rational(v: &[BigRational]) -> IntPoly {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * &lcm).to_integer()).collect();
    IntPoly::new(ints).primitive_part()
}

/// Monic greatest common divisor of `f` and a monic `g` in `Z[t]`.
///
/// Runs Euclid over the rationals, takes the primitive integer form of the
/// last nonzero remainder and checks it divides both inputs exactly. Any
/// monic rational divisor of a monic integer polynomial has integer
/// coefficients, so the result is always monic.
pub fn monic_gcd(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    g.require_monic()?;
    if f.is_zero() {
        return Ok(g.clone());
    }
    let mut a = to_rational(g);
    let mut b = to_rational(f);
    while !b.is_empty() {
        // keep remainders primitive to stop coefficient growth
        let r = rem_q(a, &b);
        a = b;
        b = to_rational(&primitive_from_rational(&r));
    }
    let z = primitive_from_rational(&a);
    if !z.is_monic() {
        return Err(Error::InvalidInput(format!("gcd {z} of {f} and {g} is not monic")));
    }
    if f.div_exact(&z).is_none() || g.div_exact(&z).is_none() {
        return Err(Error::InvalidInput(format!("gcd {z} failed the trial-division check")));
    }
    Ok(z)
}
